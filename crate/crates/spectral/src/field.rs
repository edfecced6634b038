//! Real and complex grid functions with trigonometric spectral semantics:
//! a field *is* the band-limited interpolant of its samples.

use crate::grid::TorusGrid;
use crate::SpectralError;
use num_complex::Complex64;

#[derive(Clone, Debug)]
pub struct ScalarField {
    pub grid: TorusGrid,
    pub values: Vec<f64>,
}

impl ScalarField {
    pub fn zeros(grid: &TorusGrid) -> Self {
        ScalarField {
            grid: grid.clone(),
            values: vec![0.0; grid.len()],
        }
    }

    pub fn constant(grid: &TorusGrid, c: f64) -> Self {
        ScalarField {
            grid: grid.clone(),
            values: vec![c; grid.len()],
        }
    }

    pub fn from_fn(grid: &TorusGrid, f: impl Fn(&[f64]) -> f64) -> Self {
        let mut values = vec![0.0; grid.len()];
        grid.for_each_index(|linear, idx| {
            values[linear] = f(&grid.coords(idx));
        });
        ScalarField { grid: grid.clone(), values }
    }

    pub fn check_finite(&self) -> Result<(), SpectralError> {
        if self.values.iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(SpectralError::NotFinite)
        }
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Root-mean-square norm (grid-resolution independent 2-norm).
    pub fn l2_norm(&self) -> f64 {
        (self.values.iter().map(|v| v * v).sum::<f64>() / self.values.len() as f64).sqrt()
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        ScalarField {
            grid: self.grid.clone(),
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn zip(&self, other: &ScalarField, f: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(self.grid, other.grid, "grid mismatch");
        ScalarField {
            grid: self.grid.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn axpy(&mut self, a: f64, other: &ScalarField) {
        assert_eq!(self.grid, other.grid);
        for (x, y) in self.values.iter_mut().zip(&other.values) {
            *x += a * y;
        }
    }

    pub fn scale_in_place(&mut self, a: f64) {
        for x in self.values.iter_mut() {
            *x *= a;
        }
    }

    pub fn dot(&self, other: &ScalarField) -> f64 {
        assert_eq!(self.grid, other.grid);
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.values.iter().map(|&v| Complex64::new(v, 0.0)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct ComplexField {
    pub grid: TorusGrid,
    pub values: Vec<Complex64>,
}

impl ComplexField {
    pub fn zeros(grid: &TorusGrid) -> Self {
        ComplexField {
            grid: grid.clone(),
            values: vec![Complex64::new(0.0, 0.0); grid.len()],
        }
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.norm()))
    }

    pub fn l2_norm(&self) -> f64 {
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() / self.values.len() as f64).sqrt()
    }

    pub fn re(&self) -> ScalarField {
        ScalarField {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v.re).collect(),
        }
    }

    pub fn im(&self) -> ScalarField {
        ScalarField {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v.im).collect(),
        }
    }
}

/// Normalised Fourier coefficients of a field: `u(x) = sum_k c_k e^{2 pi i k.x}`.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub grid: TorusGrid,
    pub coeffs: Vec<Complex64>,
}

impl Spectrum {
    pub fn zeros(grid: &TorusGrid) -> Self {
        Spectrum {
            grid: grid.clone(),
            coeffs: vec![Complex64::new(0.0, 0.0); grid.len()],
        }
    }

    /// Sum of coefficient magnitudes: an upper bound for the sup norm of the
    /// synthesised field.
    pub fn l1(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    /// Apply a wavenumber multiplier in place.
    pub fn apply_multiplier(&mut self, f: impl Fn(&[i64]) -> Complex64) {
        let dims = self.grid.dims().to_vec();
        let mut k = vec![0i64; dims.len()];
        let mut idx = vec![0usize; dims.len()];
        for c in self.coeffs.iter_mut() {
            for (ax, &i) in idx.iter().enumerate() {
                k[ax] = TorusGrid::wavenumber(i, dims[ax]);
            }
            *c *= f(&k);
            for ax in (0..dims.len()).rev() {
                idx[ax] += 1;
                if idx[ax] < dims[ax] {
                    break;
                }
                idx[ax] = 0;
            }
        }
    }
}
