//! Spectral calculus on torus fields: Laplacian, derivatives, `ddbar` of
//! scalars, and zero-mean Poisson solves. The Laplacian follows the
//! positive-spectrum convention `Delta = -sum d^2`.

use crate::fft::NdFft;
use crate::field::{ComplexField, ScalarField, Spectrum};
use crate::grid::TorusGrid;
use crate::SpectralError;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Forward transform to normalised coefficients.
pub fn analyze(u: &ScalarField) -> Spectrum {
    let mut data = u.to_complex();
    let mut fft = NdFft::new(u.grid.dims());
    fft.forward(&mut data);
    let scale = 1.0 / u.grid.len() as f64;
    for c in data.iter_mut() {
        *c *= scale;
    }
    Spectrum { grid: u.grid.clone(), coeffs: data }
}

/// Synthesis back to samples (real part).
pub fn synthesize(spec: &Spectrum) -> ScalarField {
    let mut data = spec.coeffs.clone();
    let mut fft = NdFft::new(spec.grid.dims());
    fft.inverse(&mut data);
    ScalarField {
        grid: spec.grid.clone(),
        values: data.iter().map(|c| c.re).collect(),
    }
}

pub fn synthesize_complex(spec: &Spectrum) -> ComplexField {
    let mut data = spec.coeffs.clone();
    let mut fft = NdFft::new(spec.grid.dims());
    fft.inverse(&mut data);
    ComplexField { grid: spec.grid.clone(), values: data }
}

/// Zero-pad a coefficient array onto a finer grid (exact band-limited
/// interpolation).
pub fn zero_pad(spec: &Spectrum, fine: &TorusGrid) -> Result<Spectrum, SpectralError> {
    if spec.grid.ndim() != fine.ndim() {
        return Err(SpectralError::BadGrid("axis count mismatch in zero_pad".into()));
    }
    for (c, f) in spec.grid.dims().iter().zip(fine.dims()) {
        if f < c {
            return Err(SpectralError::BadGrid("target grid is coarser".into()));
        }
    }
    let mut out = Spectrum::zeros(fine);
    let coarse_dims = spec.grid.dims().to_vec();
    let fine_dims = fine.dims().to_vec();
    let mut idx = vec![0usize; coarse_dims.len()];
    for linear in 0..spec.coeffs.len() {
        let c = spec.coeffs[linear];
        if c.norm_sqr() != 0.0 {
            // skip Nyquist bins: they carry no unambiguous mode
            let mut fine_linear = 0usize;
            let mut keep = true;
            for (ax, &i) in idx.iter().enumerate() {
                let n = coarse_dims[ax];
                let k = TorusGrid::wavenumber(i, n);
                if 2 * k.unsigned_abs() as usize == n && fine_dims[ax] != n {
                    keep = false;
                    break;
                }
                let nf = fine_dims[ax];
                let fi = if k >= 0 { k as usize } else { (nf as i64 + k) as usize };
                fine_linear = fine_linear * nf + fi;
            }
            if keep {
                out.coeffs[fine_linear] = c;
            }
        }
        for ax in (0..coarse_dims.len()).rev() {
            idx[ax] += 1;
            if idx[ax] < coarse_dims[ax] {
                break;
            }
            idx[ax] = 0;
        }
    }
    Ok(out)
}

/// `Delta u` with `Delta = -sum d^2` (positive spectrum).
pub fn laplacian(u: &ScalarField) -> ScalarField {
    let mut spec = analyze(u);
    spec.apply_multiplier(|k| {
        let ksq: f64 = k.iter().map(|&ki| (ki as f64) * (ki as f64)).sum();
        Complex64::new(4.0 * PI * PI * ksq, 0.0)
    });
    synthesize(&spec)
}

/// First derivative along one axis (Nyquist bin zeroed).
pub fn derivative(u: &ScalarField, axis: usize) -> ScalarField {
    let n_axis = u.grid.dims()[axis];
    let mut spec = analyze(u);
    spec.apply_multiplier(|k| {
        let ka = k[axis];
        if 2 * ka.unsigned_abs() as usize == n_axis {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(0.0, 2.0 * PI * ka as f64)
        }
    });
    synthesize(&spec)
}

/// The complex Hessian `H_jk = d^2 u / dz_j dzbar_k` as coefficient grids,
/// for grids modelling `T^{2n}` with axes `x_1, y_1, ..., x_n, y_n`.
#[derive(Clone, Debug)]
pub struct DdbarField {
    pub n: usize,
    pub comps: Vec<ComplexField>, // row-major j*n + k
}

impl DdbarField {
    pub fn comp(&self, j: usize, k: usize) -> &ComplexField {
        &self.comps[j * self.n + k]
    }

    /// `-4 sum_k H_kk`, which must equal `Delta u` to spectral accuracy.
    pub fn trace_laplacian(&self) -> ScalarField {
        let grid = self.comps[0].grid.clone();
        let mut out = ScalarField::zeros(&grid);
        for k in 0..self.n {
            let c = self.comp(k, k);
            for (o, v) in out.values.iter_mut().zip(&c.values) {
                *o -= 4.0 * v.re;
            }
        }
        out
    }
}

/// Multiplier for `d/dz_j` at wavenumber `k`: `pi (i k_x + k_y)`.
pub fn dz_multiplier(k: &[i64], j: usize, dims: &[usize]) -> Complex64 {
    let kx = deriv_wavenumber(k[2 * j], dims[2 * j]);
    let ky = deriv_wavenumber(k[2 * j + 1], dims[2 * j + 1]);
    Complex64::new(PI * ky, PI * kx)
}

/// Multiplier for `d/dzbar_j` at wavenumber `k`: `pi (i k_x - k_y)`.
pub fn dzbar_multiplier(k: &[i64], j: usize, dims: &[usize]) -> Complex64 {
    let kx = deriv_wavenumber(k[2 * j], dims[2 * j]);
    let ky = deriv_wavenumber(k[2 * j + 1], dims[2 * j + 1]);
    Complex64::new(-PI * ky, PI * kx)
}

fn deriv_wavenumber(k: i64, n: usize) -> f64 {
    if 2 * k.unsigned_abs() as usize == n {
        0.0
    } else {
        k as f64
    }
}

pub fn ddbar_scalar(u: &ScalarField) -> Result<DdbarField, SpectralError> {
    let n = u
        .grid
        .complex_dim()
        .ok_or_else(|| SpectralError::BadGrid("ddbar needs an even axis count".into()))?;
    let dims = u.grid.dims().to_vec();
    let base = analyze(u);
    let mut comps = Vec::with_capacity(n * n);
    for j in 0..n {
        for kk in 0..n {
            let mut spec = base.clone();
            spec.apply_multiplier(|k| dz_multiplier(k, j, &dims) * dzbar_multiplier(k, kk, &dims));
            comps.push(synthesize_complex(&spec));
        }
    }
    Ok(DdbarField { n, comps })
}

/// Solve `Delta u = f` with `mean(u) = 0`; `f` must have (numerically) zero
/// mean or the problem is unsolvable on the torus.
pub fn poisson_solve(f: &ScalarField) -> Result<ScalarField, SpectralError> {
    f.check_finite()?;
    let mean = f.mean();
    let scale = f.sup_norm().max(1.0);
    if mean.abs() > 1e-12 * scale {
        return Err(SpectralError::NonZeroMean { mean, scale });
    }
    let mut spec = analyze(f);
    spec.apply_multiplier(|k| {
        let ksq: f64 = k.iter().map(|&ki| (ki as f64) * (ki as f64)).sum();
        if ksq == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(1.0 / (4.0 * PI * PI * ksq), 0.0)
        }
    });
    Ok(synthesize(&spec))
}
