//! Line-bundle data on products of square tori: densities, reference
//! curvatures, and the harmonic/potential decomposition of curvature.

use crate::theta;
use crate::GeometryError;
use spectral::{ddbar_scalar, poisson_solve, ScalarField, TorusGrid};
use std::f64::consts::PI;

/// One `T^2` factor carrying a degree-`d` bundle. A negative degree stands
/// for the dual of the `|d|`-theta bundle: the stored density is then the
/// density of the canonical holomorphic section of the *dual* (which is what
/// enters the anti-holomorphic-section constructions), and the curvature
/// coefficient flips sign.
#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    pub degree: i64,
}

impl Factor {
    /// Curvature constant: `F_{A_0} = c * (i dx ^ dy)` with `c = -2 pi d`.
    pub fn curvature_coeff(&self) -> f64 {
        -2.0 * PI * self.degree as f64
    }

    pub fn density_table(&self, n: usize) -> Vec<f64> {
        if self.degree == 0 {
            vec![1.0; n * n]
        } else {
            theta::density_table(self.degree.unsigned_abs() as u32, n)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LineBundleData {
    pub factors: Vec<Factor>,
}

impl LineBundleData {
    pub fn trivial(n_factors: usize) -> Self {
        LineBundleData {
            factors: vec![Factor { degree: 0 }; n_factors],
        }
    }

    pub fn from_degrees(degrees: &[i64]) -> Self {
        LineBundleData {
            factors: degrees.iter().map(|&degree| Factor { degree }).collect(),
        }
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.factors.iter().map(|f| f.degree).collect()
    }

    pub fn curvature_coeffs(&self) -> Vec<f64> {
        self.factors.iter().map(|f| f.curvature_coeff()).collect()
    }

    /// Product density on a `T^{2n}` grid (axes `x_1, y_1, ..., x_n, y_n`).
    pub fn density_on(&self, grid: &TorusGrid) -> Result<ScalarField, GeometryError> {
        let tables = self.density_tables_for(grid)?;
        let dims = grid.dims();
        let mut out = ScalarField::zeros(grid);
        grid.for_each_index(|linear, idx| {
            let mut w = 1.0f64;
            for (j, t) in tables.iter().enumerate() {
                let n = dims[2 * j];
                w *= t[idx[2 * j] * n + idx[2 * j + 1]];
            }
            out.values[linear] = w;
        });
        Ok(out)
    }

    /// Per-factor density tables matched to the grid's axis sizes.
    pub fn density_tables_for(&self, grid: &TorusGrid) -> Result<Vec<Vec<f64>>, GeometryError> {
        let n = grid
            .complex_dim()
            .ok_or_else(|| GeometryError::Incompatible("grid has odd axis count".into()))?;
        if n != self.factors.len() {
            return Err(GeometryError::Incompatible(format!(
                "bundle has {} factors but the grid models T^{}",
                self.factors.len(),
                2 * n
            )));
        }
        let dims = grid.dims();
        let mut tables = Vec::new();
        for (j, f) in self.factors.iter().enumerate() {
            if dims[2 * j] != dims[2 * j + 1] {
                return Err(GeometryError::Incompatible(format!(
                    "factor {} axes have different sample counts",
                    j
                )));
            }
            tables.push(f.density_table(dims[2 * j]));
        }
        Ok(tables)
    }

    /// Degree from the curvature integral: `int_factor (i/2pi) F = degree`.
    pub fn degree_from_curvature(&self, j: usize) -> f64 {
        // F = c (i dx dy) with unit factor area: (i/2pi) F integrates to -c/(2 pi)
        -self.factors[j].curvature_coeff() / (2.0 * PI)
    }
}

/// Tensor product over matching factor lists: degrees add.
pub fn tensor(a: &LineBundleData, b: &LineBundleData) -> Result<LineBundleData, GeometryError> {
    if a.factors.len() != b.factors.len() {
        return Err(GeometryError::Incompatible("factor count mismatch".into()));
    }
    Ok(LineBundleData::from_degrees(
        &a.degrees()
            .iter()
            .zip(b.degrees())
            .map(|(x, y)| x + y)
            .collect::<Vec<_>>(),
    ))
}

/// Single-factor theta bundle of positive degree.
pub fn theta_density(d: u32, samples: usize) -> Result<LineBundleData, GeometryError> {
    if d < 1 {
        return Err(GeometryError::BadDegree(d as i64));
    }
    if samples < 32 {
        return Err(GeometryError::Incompatible(format!(
            "need at least 32 samples per axis for a theta factor, got {}",
            samples
        )));
    }
    let tail = theta::truncation_tail_bound(1.5);
    if tail >= 1e-14 {
        return Err(GeometryError::SeriesNotConverged(tail));
    }
    Ok(LineBundleData::from_degrees(&[d as i64]))
}

/// Product of single-factor bundles (or trivial markers) into one bundle on
/// the product torus; densities multiply, curvatures add, degrees concatenate.
pub fn product_bundle(factors: &[LineBundleData]) -> Result<LineBundleData, GeometryError> {
    let mut degrees = Vec::new();
    for f in factors {
        degrees.extend(f.degrees());
    }
    Ok(LineBundleData::from_degrees(&degrees))
}

/// Curvature data for the associated spin bundle: constant per-factor
/// coefficients plus an optional exact `4 ddbar p` perturbation.
#[derive(Clone, Debug)]
pub struct CurvatureData {
    /// `F_harmonic = sum_j coeff_j * (i dx_j ^ dy_j)`.
    pub factor_coeffs: Vec<f64>,
    /// Optional scalar potential `p` contributing `F += 4 ddbar p`.
    pub potential: Option<ScalarField>,
}

/// Background potential for `F = 4 ddbar f0 + h * (i omega)`: recovers a
/// mean-zero `f0` and the harmonic coefficient `h`, checking that the
/// harmonic part is proportional to `omega` (equal factor coefficients) and
/// that the decomposition residual vanishes to the stated tolerance.
pub struct BackgroundPotential {
    pub f0: ScalarField,
    pub harmonic_coeff: f64,
    pub residual: f64,
}

pub fn background_potential(
    curv: &CurvatureData,
    grid: &TorusGrid,
) -> Result<BackgroundPotential, GeometryError> {
    let h = curv.factor_coeffs[0];
    for (j, &c) in curv.factor_coeffs.iter().enumerate() {
        if (c - h).abs() > 1e-10 * h.abs().max(1.0) {
            return Err(GeometryError::SlopeError {
                coeffs: curv.factor_coeffs.clone(),
                offending: j,
            });
        }
    }
    match &curv.potential {
        None => Ok(BackgroundPotential {
            f0: ScalarField::zeros(grid),
            harmonic_coeff: h,
            residual: 0.0,
        }),
        Some(p) => {
            // the trace of 4 ddbar f0 is -Delta f0, so the fluctuating part
            // of the curvature trace determines f0 through a Poisson solve
            let lap_p = spectral::laplacian(p);
            let f0 = poisson_solve(&lap_p)?;
            let hp = ddbar_scalar(p)?;
            let hf = ddbar_scalar(&f0)?;
            let mut residual = 0.0f64;
            let n = hp.n;
            for j in 0..n {
                for k in 0..n {
                    let d = hp.comp(j, k);
                    let e = hf.comp(j, k);
                    for (a, b) in d.values.iter().zip(&e.values) {
                        residual = residual.max((a - b).norm());
                    }
                }
            }
            if residual > 1e-10 {
                return Err(GeometryError::DecompositionResidual(residual));
            }
            Ok(BackgroundPotential { f0, harmonic_coeff: h, residual })
        }
    }
}
