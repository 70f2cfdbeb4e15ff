//! Minors modeling of the MinRank problem over prime fields.
//!
//! The crate generates classical and generalized MinRank instances, builds the
//! system of `(r+1)`-minors, measures its solving degree with a degrevlex
//! Macaulay-matrix stepper (checked against a Buchberger oracle), and compares
//! the measurement with closed-form regularity bounds.

pub mod bounds;
pub mod error;
pub mod field;
pub mod gbengine;
pub mod harness;
pub mod instance_io;
pub mod linalg;
pub mod multipoly;
pub mod polymatrix;

pub use bounds::{bound_report, classify, BoundReport, ProblemClass};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldPrime};
pub use gbengine::{buchberger, solving_degree, GroebnerBasis, SolveOptions, SolvingDegreeReport};
pub use multipoly::{degrevlex_cmp, Monomial, Polynomial};
pub use polymatrix::{
    minors, random_instance, DegreeMatrix, InstanceKind, MinRankInstance, MinorsSystem, PolyMatrix,
};
