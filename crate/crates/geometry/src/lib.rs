//! Concrete line-bundle data on square tori: theta-function sections of
//! degree-`d` bundles on `T^2`, their gauge-invariant densities and reference
//! curvatures, and product assemblies for `T^6` and `T^8`.

mod bundle;
pub mod theta;

pub use bundle::{
    background_potential, product_bundle, tensor, theta_density, BackgroundPotential,
    CurvatureData, Factor, LineBundleData,
};

#[derive(Debug, thiserror::Error)]
pub enum GeometryError {
    #[error("theta factors need degree >= 1, got {0}")]
    BadDegree(i64),
    #[error("theta series truncation tail {0:.3e} not below 1e-14")]
    SeriesNotConverged(f64),
    #[error("incompatible factor data: {0}")]
    Incompatible(String),
    #[error("curvature is not proportional to omega: factor coefficients {coeffs:?} (factor {offending} deviates)")]
    SlopeError { coeffs: Vec<f64>, offending: usize },
    #[error("curvature decomposition residual {0:.3e} exceeds 1e-10")]
    DecompositionResidual(f64),
    #[error(transparent)]
    Spectral(#[from] spectral::SpectralError),
}
