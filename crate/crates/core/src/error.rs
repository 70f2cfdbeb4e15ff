use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid modulus {0}: {1}")]
    InvalidModulus(u32, &'static str),

    #[error("modulus mismatch: F_{0} vs F_{1}")]
    ModulusMismatch(u32, u32),

    #[error("division by zero")]
    DivisionByZero,

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("invalid degree matrix: {0}")]
    InvalidDegree(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree cap {cap} exceeded (reached degree {reached})")]
    DegreeCapExceeded { cap: u32, reached: u32 },

    #[error("non-homogeneous input: {0}")]
    NotHomogeneous(String),

    #[error("homogenization does not commute with the minor on rows {rows:?}, columns {cols:?} (1-based)")]
    HomogenizationFailure { rows: Vec<usize>, cols: Vec<usize> },

    #[error("instance not covered by the bounds ({0}); pass the override flag to proceed")]
    NotApplicable(String),

    #[error("search space too large: {0} points exceeds the limit of {1}")]
    SearchSpaceTooLarge(u128, u128),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParams(msg.into())
    }
}
