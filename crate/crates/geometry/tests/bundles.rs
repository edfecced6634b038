//! Bundle-level oracles: densities, curvature integrals, products, and the
//! background-potential decomposition.

use geometry::{
    background_potential, product_bundle, theta_density, CurvatureData, GeometryError,
    LineBundleData,
};
use spectral::{ScalarField, TorusGrid};
use std::f64::consts::PI;

#[test]
fn trivial_product_is_flat() {
    let b = LineBundleData::trivial(3);
    let grid = TorusGrid::torus_2n(3, 8).unwrap();
    let w = b.density_on(&grid).unwrap();
    assert!(w.values.iter().all(|&v| v == 1.0));
    assert!(b.curvature_coeffs().iter().all(|&c| c == 0.0));
}

#[test]
fn theta_product_density_is_pointwise_product() {
    let f1 = theta_density(1, 32).unwrap();
    let f2 = theta_density(2, 32).unwrap();
    let f3 = theta_density(1, 32).unwrap();
    let b = product_bundle(&[f1, f2, f3]).unwrap();
    assert_eq!(b.degrees(), vec![1, 2, 1]);
    let grid = TorusGrid::torus_2n(3, 8).unwrap();
    let w = b.density_on(&grid).unwrap();
    let tables = b.density_tables_for(&grid).unwrap();
    let dims = grid.dims();
    for (ix, iy, jx, jy, kx, ky) in [(0, 0, 0, 0, 0, 0), (3, 7, 1, 2, 6, 5), (4, 4, 4, 4, 4, 4)] {
        let linear = ((((ix * dims[1] + iy) * dims[2] + jx) * dims[3] + jy) * dims[4] + kx)
            * dims[5]
            + ky;
        let expected = tables[0][ix * 8 + iy] * tables[1][jx * 8 + jy] * tables[2][kx * 8 + ky];
        assert!((w.values[linear] - expected).abs() <= 1e-15 * expected.max(1.0));
    }
}

#[test]
fn curvature_integral_gives_degree() {
    for d in [1i64, 2, -1] {
        let b = LineBundleData::from_degrees(&[d]);
        assert!((b.degree_from_curvature(0) - d as f64).abs() < 1e-12);
    }
}

#[test]
fn equal_degree_product_background_is_constant() {
    let b = LineBundleData::from_degrees(&[1, 1, 1]);
    let grid = TorusGrid::torus_2n(3, 8).unwrap();
    // spin-bundle curvature F_A = 2 F_{A_0} on tori
    let coeffs: Vec<f64> = b.curvature_coeffs().iter().map(|c| 2.0 * c).collect();
    let curv = CurvatureData { factor_coeffs: coeffs, potential: None };
    let bp = background_potential(&curv, &grid).unwrap();
    assert!(bp.f0.sup_norm() == 0.0);
    assert!((bp.harmonic_coeff - (-4.0 * PI)).abs() < 1e-12);
    assert!(bp.residual == 0.0);
}

#[test]
fn mixed_degrees_fail_the_slope_check() {
    let b = LineBundleData::from_degrees(&[1, 2, 1]);
    let grid = TorusGrid::torus_2n(3, 8).unwrap();
    let curv = CurvatureData {
        factor_coeffs: b.curvature_coeffs(),
        potential: None,
    };
    match background_potential(&curv, &grid) {
        Err(GeometryError::SlopeError { offending, .. }) => assert_eq!(offending, 1),
        other => panic!("expected slope error, got {:?}", other.map(|_| ()).err()),
    }
}

#[test]
fn background_potential_recovers_injected_perturbation() {
    let grid = TorusGrid::torus_2n(2, 16).unwrap();
    let tp = 2.0 * PI;
    let p = ScalarField::from_fn(&grid, |x| {
        0.3 * (tp * x[0]).cos() * (tp * x[3]).sin() + 0.1 * (tp * x[2]).sin()
    });
    let curv = CurvatureData {
        factor_coeffs: vec![-4.0 * PI, -4.0 * PI],
        potential: Some(p.clone()),
    };
    let bp = background_potential(&curv, &grid).unwrap();
    let mean = p.mean();
    let err = bp.f0.zip(&p, |a, b| a - (b - mean)).sup_norm();
    assert!(err <= 1e-10, "recovery error {}", err);
    assert!(bp.residual <= 1e-10);
}

#[test]
fn theta_density_rejects_bad_input() {
    assert!(theta_density(0, 64).is_err());
    assert!(theta_density(1, 16).is_err());
}

#[test]
fn factor_grid_compat_enforced() {
    let b = LineBundleData::from_degrees(&[1, 1]);
    let bad = TorusGrid::new(vec![16, 16, 16, 12]).unwrap();
    assert!(b.density_on(&bad).is_err());
    let worse = TorusGrid::new(vec![16, 16, 16]).unwrap();
    assert!(b.density_on(&worse).is_err());
}
