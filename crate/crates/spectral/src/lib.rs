//! Trigonometric-spectral calculus and nonlinear solvers on flat tori
//! `T^{2n}` with unit period per coordinate: Laplacian, `ddbar` of scalars,
//! zero-mean Poisson solves, and a damped-Newton Kazdan--Warner solver.

mod fft;
mod field;
mod grid;
mod io;
mod kw;
mod ops;

pub use fft::NdFft;
pub use field::{ComplexField, ScalarField, Spectrum};
pub use grid::{TorusGrid, DEFAULT_POINT_BUDGET};
pub use io::{dump_complex, dump_scalar, load_field, LoadedField, MAGIC};
pub use kw::{jacobian_check, kw_solve, JacobianCheck, KwDiagnostics, KwOptions, KwProblem};
pub use ops::{
    analyze, ddbar_scalar, derivative, dz_multiplier, dzbar_multiplier, laplacian, poisson_solve,
    synthesize, synthesize_complex, zero_pad, DdbarField,
};

#[derive(Debug, thiserror::Error)]
pub enum SpectralError {
    #[error("bad grid: {0}")]
    BadGrid(String),
    #[error("grid of {points} points exceeds the configured budget of {budget}")]
    GridTooLarge { points: usize, budget: usize },
    #[error("field contains non-finite values")]
    NotFinite,
    #[error("right-hand side has nonzero mean {mean:.3e} (scale {scale:.3e}); no periodic solution")]
    NonZeroMean { mean: f64, scale: f64 },
    #[error("weight W has negative values (min {min:.3e})")]
    NegativeWeight { min: f64 },
    #[error("weight W is identically zero")]
    ZeroWeight,
    #[error("constant must be positive for the solvable regime, got {c:.3e}")]
    BadConstant { c: f64 },
    #[error("Newton iteration failed to converge; residual history {history:?}")]
    NonConvergence { history: Vec<f64> },
    #[error("bad field dump: {0}")]
    BadDump(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
