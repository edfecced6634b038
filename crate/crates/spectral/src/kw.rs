//! Damped-Newton solver for the Kazdan--Warner equation
//! `Delta u + W e^{kappa u} = c` with `W >= 0`, `W` not identically zero and
//! `c > 0` (the uniquely solvable regime). The Newton operator
//! `Delta + kappa W e^{kappa u}` is positive, so each step is solved by
//! conjugate gradients preconditioned with the constant-coefficient operator
//! `(Delta + mean)^{-1}`, which is diagonal in Fourier space.

use crate::fft::NdFft;
use crate::field::ScalarField;
use crate::grid::TorusGrid;
use crate::SpectralError;
use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Clone, Debug)]
pub struct KwProblem {
    pub w: ScalarField,
    pub kappa: f64,
    pub c: f64,
}

impl KwProblem {
    pub fn validate(&self) -> Result<(), SpectralError> {
        self.w.check_finite()?;
        let min = self.w.min();
        if min < 0.0 {
            return Err(SpectralError::NegativeWeight { min });
        }
        if self.w.mean() <= 0.0 {
            return Err(SpectralError::ZeroWeight);
        }
        if self.c <= 0.0 {
            return Err(SpectralError::BadConstant { c: self.c });
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct KwOptions {
    /// Sup-norm residual target.
    pub tol: f64,
    pub max_newton: usize,
    /// Relative CG tolerance for each Newton step.
    pub cg_tol: f64,
    pub cg_max: usize,
    pub initial: Option<ScalarField>,
}

impl Default for KwOptions {
    fn default() -> Self {
        KwOptions {
            tol: 1e-10,
            max_newton: 50,
            cg_tol: 1e-10,
            cg_max: 400,
            initial: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct KwDiagnostics {
    pub newton_iterations: usize,
    pub cg_iterations: usize,
    pub final_residual_sup: f64,
    pub residual_history: Vec<f64>,
    /// Mean of the zeroth-order Newton coefficient `kappa W e^{kappa u}` at
    /// the solution: a positivity certificate for the linearised operator.
    pub spectrum_bound: f64,
}

struct Workspace {
    fft: NdFft,
    buf: Vec<Complex64>,
    inv_mult: Vec<f64>,
    lap_mult: Vec<f64>,
}

impl Workspace {
    fn new(grid: &TorusGrid, precond_shift: f64) -> Self {
        let mut lap_mult = vec![0.0f64; grid.len()];
        let dims = grid.dims().to_vec();
        let mut idx = vec![0usize; dims.len()];
        for m in lap_mult.iter_mut() {
            let mut ksq = 0.0;
            for (ax, &i) in idx.iter().enumerate() {
                let k = TorusGrid::wavenumber(i, dims[ax]) as f64;
                ksq += k * k;
            }
            *m = 4.0 * PI * PI * ksq;
            for ax in (0..dims.len()).rev() {
                idx[ax] += 1;
                if idx[ax] < dims[ax] {
                    break;
                }
                idx[ax] = 0;
            }
        }
        let inv_mult = lap_mult.iter().map(|&l| 1.0 / (l + precond_shift)).collect();
        Workspace {
            fft: NdFft::new(grid.dims()),
            buf: vec![Complex64::new(0.0, 0.0); grid.len()],
            inv_mult,
            lap_mult,
        }
    }

    fn laplacian_into(&mut self, u: &ScalarField, out: &mut ScalarField) {
        let n = u.values.len();
        for (b, &v) in self.buf.iter_mut().zip(&u.values) {
            *b = Complex64::new(v, 0.0);
        }
        self.fft.forward(&mut self.buf);
        let scale = 1.0 / n as f64;
        for (b, &m) in self.buf.iter_mut().zip(&self.lap_mult) {
            *b *= m * scale;
        }
        self.fft.inverse(&mut self.buf);
        for (o, b) in out.values.iter_mut().zip(&self.buf) {
            *o = b.re;
        }
    }

    fn precondition_into(&mut self, r: &ScalarField, out: &mut ScalarField) {
        let n = r.values.len();
        for (b, &v) in self.buf.iter_mut().zip(&r.values) {
            *b = Complex64::new(v, 0.0);
        }
        self.fft.forward(&mut self.buf);
        let scale = 1.0 / n as f64;
        for (b, &m) in self.buf.iter_mut().zip(&self.inv_mult) {
            *b *= m * scale;
        }
        self.fft.inverse(&mut self.buf);
        for (o, b) in out.values.iter_mut().zip(&self.buf) {
            *o = b.re;
        }
    }
}

/// Solve the Kazdan--Warner problem. Returns the solution and diagnostics.
pub fn kw_solve(
    problem: &KwProblem,
    opts: &KwOptions,
) -> Result<(ScalarField, KwDiagnostics), SpectralError> {
    problem.validate()?;
    let grid = problem.w.grid.clone();
    let kappa = problem.kappa;
    let c = problem.c;

    // constant-balance initial guess: kappa u = ln(c / mean(W))
    let mut u = match &opts.initial {
        Some(f) => {
            assert_eq!(f.grid, grid, "initial guess grid mismatch");
            f.clone()
        }
        None => ScalarField::constant(&grid, (c / problem.w.mean()).ln() / kappa),
    };

    let mut ws = Workspace::new(&grid, kappa * problem.w.mean());
    let mut lap_u = ScalarField::zeros(&grid);
    let mut residual = ScalarField::zeros(&grid);
    let mut m_field = ScalarField::zeros(&grid);
    let mut delta = ScalarField::zeros(&grid);
    let mut lap_delta = ScalarField::zeros(&grid);
    let mut history = Vec::new();
    let mut cg_total = 0usize;

    ws.laplacian_into(&u, &mut lap_u);
    let compute_residual =
        |u: &ScalarField, lap_u: &ScalarField, residual: &mut ScalarField, m: &mut ScalarField| {
            for i in 0..u.values.len() {
                let we = problem.w.values[i] * (kappa * u.values[i]).exp();
                residual.values[i] = lap_u.values[i] + we - c;
                m.values[i] = kappa * we;
            }
        };
    compute_residual(&u, &lap_u, &mut residual, &mut m_field);

    for newton in 0..opts.max_newton {
        let res_sup = residual.sup_norm();
        history.push(res_sup);
        if !res_sup.is_finite() {
            return Err(SpectralError::NonConvergence { history });
        }
        if res_sup <= opts.tol {
            let bound = m_field.mean();
            return Ok((
                u,
                KwDiagnostics {
                    newton_iterations: newton,
                    cg_iterations: cg_total,
                    final_residual_sup: res_sup,
                    residual_history: history,
                    spectrum_bound: bound,
                },
            ));
        }

        // Newton step: (Delta + m) delta = -residual, via preconditioned CG
        for d in delta.values.iter_mut() {
            *d = 0.0;
        }
        let mut r = residual.map(|v| -v);
        let b_norm = r.l2_norm().max(f64::MIN_POSITIVE);
        let mut z = ScalarField::zeros(&grid);
        ws.precondition_into(&r, &mut z);
        let mut p = z.clone();
        let mut rz = r.dot(&z);
        let mut ap = ScalarField::zeros(&grid);
        for _ in 0..opts.cg_max {
            cg_total += 1;
            ws.laplacian_into(&p, &mut ap);
            for i in 0..ap.values.len() {
                ap.values[i] += m_field.values[i] * p.values[i];
            }
            let p_ap = p.dot(&ap);
            if p_ap <= 0.0 {
                break;
            }
            let alpha = rz / p_ap;
            delta.axpy(alpha, &p);
            r.axpy(-alpha, &ap);
            if r.l2_norm() <= opts.cg_tol * b_norm {
                break;
            }
            ws.precondition_into(&r, &mut z);
            let rz_new = r.dot(&z);
            let beta = rz_new / rz;
            rz = rz_new;
            for i in 0..p.values.len() {
                p.values[i] = z.values[i] + beta * p.values[i];
            }
        }

        // backtracking line search on the residual 2-norm
        ws.laplacian_into(&delta, &mut lap_delta);
        let base_norm = residual.l2_norm();
        let mut t = 1.0f64;
        let mut accepted = false;
        for _ in 0..40 {
            let mut trial_norm = 0.0f64;
            for i in 0..u.values.len() {
                let ui = u.values[i] + t * delta.values[i];
                let li = lap_u.values[i] + t * lap_delta.values[i];
                let ri = li + problem.w.values[i] * (kappa * ui).exp() - c;
                trial_norm += ri * ri;
            }
            trial_norm = (trial_norm / u.values.len() as f64).sqrt();
            if trial_norm <= (1.0 - 1e-4 * t) * base_norm {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            history.push(base_norm);
            return Err(SpectralError::NonConvergence { history });
        }
        u.axpy(t, &delta);
        lap_u.axpy(t, &lap_delta);
        compute_residual(&u, &lap_u, &mut residual, &mut m_field);
    }

    history.push(residual.sup_norm());
    Err(SpectralError::NonConvergence { history })
}

#[derive(Clone, Debug)]
pub struct JacobianCheck {
    pub analytic_norm: f64,
    pub difference_norm: f64,
    pub relative_error: f64,
    pub pass: bool,
}

/// Directional-derivative check of the Kazdan--Warner residual: compares
/// `J_u[v] = Delta v + kappa W e^{kappa u} v` against the central finite
/// difference of the residual map.
pub fn jacobian_check(
    problem: &KwProblem,
    u: &ScalarField,
    v: &ScalarField,
    step: f64,
) -> Result<JacobianCheck, SpectralError> {
    problem.validate()?;
    let residual = |f: &ScalarField| -> ScalarField {
        let lap = crate::ops::laplacian(f);
        let mut out = lap;
        for i in 0..out.values.len() {
            out.values[i] += problem.w.values[i] * (problem.kappa * f.values[i]).exp() - problem.c;
        }
        out
    };
    let mut up = u.clone();
    up.axpy(step, v);
    let mut um = u.clone();
    um.axpy(-step, v);
    let rp = residual(&up);
    let rm = residual(&um);
    let fd = rp.zip(&rm, |a, b| (a - b) / (2.0 * step));

    let mut analytic = crate::ops::laplacian(v);
    for i in 0..analytic.values.len() {
        analytic.values[i] +=
            problem.kappa * problem.w.values[i] * (problem.kappa * u.values[i]).exp() * v.values[i];
    }
    let diff = fd.zip(&analytic, |a, b| a - b);
    let denom = analytic.sup_norm();
    let relative = if denom == 0.0 {
        diff.sup_norm()
    } else {
        diff.sup_norm() / denom
    };
    Ok(JacobianCheck {
        analytic_norm: denom,
        difference_norm: diff.sup_norm(),
        relative_error: relative,
        pass: relative <= 1e-6,
    })
}
