//! Closed-form solving-degree bounds for the minors modeling and the
//! regularity chain behind them.
//!
//! All formulas use 1-based indices in their docs; the code is 0-based.
//! Inputs are capped (`m, n ≤ 64`, entry degrees `≤ 2^20`) so plain `i64`
//! arithmetic cannot overflow.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polymatrix::{DegreeMatrix, InstanceKind, MinRankInstance, MAX_DIM};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProblemClass {
    UnderDefined,
    WellDefined,
    OverDetermined,
}

impl std::fmt::Display for ProblemClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ProblemClass::UnderDefined => "under-defined",
            ProblemClass::WellDefined => "well-defined",
            ProblemClass::OverDetermined => "over-determined",
        })
    }
}

fn check_shape(m: usize, n: usize, r: usize) -> Result<()> {
    if !(r < m && m <= n) {
        return Err(Error::params(format!(
            "need r < m <= n, got m={m}, n={n}, r={r}"
        )));
    }
    if n > MAX_DIM {
        return Err(Error::params(format!("n={n} exceeds the cap of {MAX_DIM}")));
    }
    Ok(())
}

fn codim(m: usize, n: usize, r: usize) -> i64 {
    (m - r) as i64 * (n - r) as i64
}

/// Compares `k` with the codimension `(m-r)(n-r)`.
pub fn classify(m: usize, n: usize, r: usize, k: usize) -> Result<ProblemClass> {
    check_shape(m, n, r)?;
    if k == 0 {
        return Err(Error::params("need k >= 1"));
    }
    Ok(match (k as i64).cmp(&codim(m, n, r)) {
        std::cmp::Ordering::Greater => ProblemClass::UnderDefined,
        std::cmp::Ordering::Equal => ProblemClass::WellDefined,
        std::cmp::Ordering::Less => ProblemClass::OverDetermined,
    })
}

/// Square classical case: `n r - r^2 + 1`.
pub fn bound_square(n: usize, r: usize) -> i64 {
    let (n, r) = (n as i64, r as i64);
    n * r - r * r + 1
}

/// Linear entries: `m r - r^2 + 1`. Independent of `n`.
pub fn bound_linear(m: usize, r: usize) -> i64 {
    bound_square(m, r)
}

/// Homogeneous entries of common degree `d`: `(m-r)(n d - n + r) + 1`.
pub fn bound_degd(m: usize, n: usize, r: usize, d: u32) -> i64 {
    let (m, n, r, d) = (m as i64, n as i64, r as i64, d as i64);
    (m - r) * (n * d - n + r) + 1
}

/// General degree matrix:
/// `(m-r) sum_{i≤r} d_ii + sum_{i>r, j>r} d_ij - (m-r)(n-r) + 1`.
pub fn bound_main(r: usize, degrees: &DegreeMatrix) -> i64 {
    let (m, n) = (degrees.nrows(), degrees.ncols());
    let diag: i64 = (0..r).map(|i| degrees.get(i, i) as i64).sum();
    let lower: i64 = (r..m)
        .flat_map(|i| (r..n).map(move |j| (i, j)))
        .map(|(i, j)| degrees.get(i, j) as i64)
        .sum();
    (m - r) as i64 * diag + lower - codim(m, n, r) + 1
}

/// Krull dimension `k - (m-r)(n-r)` of the quotient by the minors; `None`
/// when `k` is below the codimension.
pub fn krull_dim(m: usize, n: usize, r: usize, k: usize) -> Option<i64> {
    let dim = k as i64 - codim(m, n, r);
    (dim >= 0).then_some(dim)
}

/// `-r sum_{i≤m} d_ii - sum_{i≤r, j>m} d_ij` for the generic determinantal
/// ring of an `m x n` matrix with entry degrees `d`.
pub fn a_invariant(r: usize, degrees: &DegreeMatrix) -> i64 {
    let (m, n) = (degrees.nrows(), degrees.ncols());
    let diag: i64 = (0..m).map(|i| degrees.get(i, i) as i64).sum();
    let block: i64 = (0..r)
        .flat_map(|i| (m..n).map(move |j| (i, j)))
        .map(|(i, j)| degrees.get(i, j) as i64)
        .sum();
    -(r as i64) * diag - block
}

/// `reg(I) = a(T) + sum_{i,j} d_ij - (m-r)(n-r) + 1`.
pub fn regularity(r: usize, degrees: &DegreeMatrix) -> i64 {
    let (m, n) = (degrees.nrows(), degrees.ncols());
    a_invariant(r, degrees) + degrees.total() - codim(m, n, r) + 1
}

/// Everything the closed forms say about one parameter set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub degrees: DegreeMatrix,
    pub classification: ProblemClass,
    pub bound_main: i64,
    pub bound_square: Option<i64>,
    pub bound_linear: Option<i64>,
    pub bound_degd: Option<i64>,
    pub krull_dim: Option<i64>,
    pub a_invariant: i64,
    pub regularity: i64,
    /// `k ≥ (m-r)(n-r)`; outside this range the bounds are reported but
    /// carry no guarantee.
    pub applicable: bool,
    pub note: String,
}

/// Bound report from raw parameters.
pub fn bound_report_for(
    m: usize,
    n: usize,
    r: usize,
    k: usize,
    degrees: &DegreeMatrix,
) -> Result<BoundReport> {
    let classification = classify(m, n, r, k)?;
    if degrees.nrows() != m || degrees.ncols() != n {
        return Err(Error::params("degree matrix shape does not match m x n"));
    }
    let constant = degrees.constant_value();
    let applicable = classification != ProblemClass::OverDetermined;
    let note = if applicable {
        "bound holds for generic instances (a nonempty Zariski-open set of coefficients)".to_string()
    } else {
        "over-determined: bounds are reported but not guaranteed".to_string()
    };
    Ok(BoundReport {
        m,
        n,
        r,
        k,
        degrees: degrees.clone(),
        classification,
        bound_main: bound_main(r, degrees),
        bound_square: (constant == Some(1) && m == n && k as i64 == codim(m, n, r))
            .then(|| bound_square(n, r)),
        bound_linear: (constant == Some(1)).then(|| bound_linear(m, r)),
        bound_degd: constant.map(|d| bound_degd(m, n, r, d)),
        krull_dim: krull_dim(m, n, r, k),
        a_invariant: a_invariant(r, degrees),
        regularity: regularity(r, degrees),
        applicable,
        note,
    })
}

pub fn bound_report(instance: &MinRankInstance) -> Result<BoundReport> {
    if instance.kind == InstanceKind::Classical && instance.degrees.constant_value() != Some(1) {
        return Err(Error::params("classical instance with non-unit degrees"));
    }
    bound_report_for(instance.m, instance.n, instance.r, instance.k, &instance.degrees)
}
