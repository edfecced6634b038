//! Exact exterior algebra on the fiber of C^n (n <= 4) with the standard
//! metric and orientation: wedge, Hermitian contraction, complex-linear Hodge
//! star, (p,q) type splitting, self-dual/anti-self-dual splitting, and the
//! Lefschetz splitting of 3-forms on C^3. All coefficients live in
//! Q(i, sqrt(2)) and all equalities are exact.

mod multivector;
mod scalar;
mod split;

pub use multivector::{merge_sign, Mask, MultiVector};
pub use scalar::{ExactScalar, GaussQ};
pub use split::{lefschetz_split_3form, pq_split, sd_asd_split, Lefschetz3Split, PQSplit};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ExalgError {
    #[error("fiber dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u8, u8),
    #[error("expected a degree-{expected} form, got degree {got}")]
    WrongDegree { expected: u8, got: u8 },
    #[error("form has mixed degree")]
    MixedDegree,
    #[error("fiber of dimension {0} carries no complex structure")]
    NotComplexFiber(u8),
    #[error("form is not real-valued")]
    NotReal,
}

/// Convenience alias used throughout the workspace.
pub type Result<T> = std::result::Result<T, ExalgError>;
