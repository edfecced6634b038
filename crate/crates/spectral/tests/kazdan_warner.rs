//! Kazdan--Warner solver oracles: constant balances, a manufactured
//! solution, uniqueness from two starts, and the Jacobian check.

use spectral::{
    jacobian_check, kw_solve, laplacian, KwOptions, KwProblem, ScalarField, SpectralError,
    TorusGrid,
};
use std::f64::consts::PI;

const TWO_PI: f64 = 2.0 * PI;

#[test]
fn constant_balance_identity() {
    // W = 1, kappa = 1, c = 1  =>  u = 0
    let grid = TorusGrid::new(vec![16, 16]).unwrap();
    let p = KwProblem {
        w: ScalarField::constant(&grid, 1.0),
        kappa: 1.0,
        c: 1.0,
    };
    let (u, diag) = kw_solve(&p, &KwOptions::default()).unwrap();
    assert!(u.sup_norm() < 1e-12);
    assert!(diag.final_residual_sup < 1e-12);
}

#[test]
fn constant_balance_log2() {
    // W = 2, kappa = 1, c = 1  =>  u = -ln 2
    let grid = TorusGrid::new(vec![16, 16]).unwrap();
    let p = KwProblem {
        w: ScalarField::constant(&grid, 2.0),
        kappa: 1.0,
        c: 1.0,
    };
    let (u, _) = kw_solve(&p, &KwOptions::default()).unwrap();
    let expected = -(2.0f64).ln();
    assert!(u.map(|v| v - expected).sup_norm() < 1e-12);
}

#[test]
fn manufactured_solution_recovery() {
    // u* = 0.01 cos(2 pi x), c = 1, W = (c - Delta u*) e^{-u*}
    let grid = TorusGrid::new(vec![64, 64]).unwrap();
    let u_star = ScalarField::from_fn(&grid, |x| 0.01 * (TWO_PI * x[0]).cos());
    let lap = laplacian(&u_star);
    let w = u_star.zip(&lap, |u, l| (1.0 - l) * (-u).exp());
    assert!(w.min() > 0.0);
    let p = KwProblem { w, kappa: 1.0, c: 1.0 };
    let (u, diag) = kw_solve(&p, &KwOptions::default()).unwrap();
    let err = u.zip(&u_star, |a, b| a - b).sup_norm();
    assert!(err <= 1e-9, "recovery error {}", err);
    assert!(diag.final_residual_sup <= 1e-10);
    assert!(diag.spectrum_bound > 0.0);
}

#[test]
fn two_starts_agree() {
    let grid = TorusGrid::new(vec![32, 32]).unwrap();
    // positive W with strong variation
    let w = ScalarField::from_fn(&grid, |x| {
        1.5 + (TWO_PI * x[0]).cos() + 0.4 * (2.0 * TWO_PI * x[1]).sin()
    });
    assert!(w.min() > 0.0);
    let p = KwProblem { w, kappa: 2.0, c: 3.0 };
    let (u1, _) = kw_solve(&p, &KwOptions::default()).unwrap();
    let opts0 = KwOptions {
        initial: Some(ScalarField::zeros(&grid)),
        ..KwOptions::default()
    };
    let (u2, _) = kw_solve(&p, &opts0).unwrap();
    let diff = u1.zip(&u2, |a, b| a - b).sup_norm();
    assert!(diff <= 1e-8, "two-start disagreement {}", diff);
    // maximum principle bracket for strictly positive W:
    // min u <= (1/kappa) ln(c / min W) and max u >= (1/kappa) ln(c / max W)
    let brighter = (p.c / p.w.min()).ln() / p.kappa;
    let darker = (p.c / p.w.max()).ln() / p.kappa;
    assert!(u1.min() <= brighter + 1e-12);
    assert!(u1.max() >= darker - 1e-12);
}

#[test]
fn grid_refinement_consistency() {
    let f = |x: &[f64]| 1.0 + 0.5 * (TWO_PI * x[0]).cos() * (TWO_PI * x[1]).sin();
    let run = |n: usize| {
        let grid = TorusGrid::new(vec![n, n]).unwrap();
        let p = KwProblem {
            w: ScalarField::from_fn(&grid, f),
            kappa: 1.5,
            c: 2.0,
        };
        kw_solve(&p, &KwOptions::default()).unwrap().0
    };
    let coarse = run(32);
    let fine = run(64);
    // compare on the coarse points (every second fine sample)
    let mut worst = 0.0f64;
    for ix in 0..32 {
        for iy in 0..32 {
            let a = coarse.values[ix * 32 + iy];
            let b = fine.values[(2 * ix) * 64 + 2 * iy];
            worst = worst.max((a - b).abs());
        }
    }
    assert!(worst <= 1e-8, "refinement drift {}", worst);
}

#[test]
fn rejects_bad_problems() {
    let grid = TorusGrid::new(vec![16, 16]).unwrap();
    let neg = KwProblem {
        w: ScalarField::constant(&grid, -0.1),
        kappa: 1.0,
        c: 1.0,
    };
    assert!(matches!(
        kw_solve(&neg, &KwOptions::default()),
        Err(SpectralError::NegativeWeight { .. })
    ));
    let bad_c = KwProblem {
        w: ScalarField::constant(&grid, 1.0),
        kappa: 1.0,
        c: -1.0,
    };
    assert!(matches!(
        kw_solve(&bad_c, &KwOptions::default()),
        Err(SpectralError::BadConstant { .. })
    ));
}

#[test]
fn vanishing_weight_zeros_are_allowed() {
    // W >= 0 with isolated zeros (vortex-type data)
    let grid = TorusGrid::new(vec![32, 32]).unwrap();
    let w = ScalarField::from_fn(&grid, |x| {
        let dx = x[0] - 0.5;
        let dy = x[1] - 0.5;
        let s2 = (TWO_PI * dx).sin().powi(2) + (TWO_PI * dy).sin().powi(2);
        2.0 * s2
    });
    assert!(w.min() >= 0.0);
    let p = KwProblem { w, kappa: 1.0, c: 1.0 };
    let (u, diag) = kw_solve(&p, &KwOptions::default()).unwrap();
    assert!(diag.final_residual_sup <= 1e-10);
    assert!(u.sup_norm() > 0.0);
}

#[test]
fn jacobian_direction_checks() {
    let grid = TorusGrid::new(vec![32, 32]).unwrap();
    let p = KwProblem {
        w: ScalarField::constant(&grid, 1.0),
        kappa: 1.0,
        c: 1.0,
    };
    // u = 0, v = cos(2 pi x): analytic derivative Delta v + v
    let v = ScalarField::from_fn(&grid, |x| (TWO_PI * x[0]).cos());
    let report = jacobian_check(&p, &ScalarField::zeros(&grid), &v, 1e-5).unwrap();
    assert!(report.pass, "relative error {}", report.relative_error);
    // v = 0 gives exact zero both ways
    let report = jacobian_check(&p, &ScalarField::zeros(&grid), &ScalarField::zeros(&grid), 1e-5)
        .unwrap();
    assert!(report.difference_norm == 0.0);
    // random band-limited u, v
    let u = ScalarField::from_fn(&grid, |x| 0.3 * (TWO_PI * (x[0] + x[1])).sin());
    let v = ScalarField::from_fn(&grid, |x| 0.7 * (2.0 * TWO_PI * x[1]).cos() - 0.1);
    let report = jacobian_check(&p, &u, &v, 1e-5).unwrap();
    assert!(report.pass, "relative error {}", report.relative_error);
}
