//! Theta-function sections of degree-`d` line bundles on the square torus
//! `C/(Z + iZ)` and their gauge-invariant densities.
//!
//! The weight-one building block is `theta(z) = sum_n e^{-pi n^2} e^{2 pi i n z}`
//! with automorphy `theta(z + 1) = theta(z)`,
//! `theta(z + i) = e^{pi - 2 pi i z} theta(z)`, and a single zero at
//! `(1/2, 1/2)`. A degree-`d` section is the product of `d` translates
//! `theta(z - j/d)`; its density `|Theta_d|^2 e^{-2 pi d y^2}` is doubly
//! periodic with `d` vortex zeros, and the canonical metric has constant
//! curvature `F = -2 pi i d dx ^ dy`.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Series truncation: terms `|n| <= N_TRUNC`. The tail bound below certifies
/// the cutoff for every evaluation point this crate uses.
const N_TRUNC: i64 = 8;

/// Upper bound for the dropped tail at height `|y| <= y_max`: the first
/// omitted term has magnitude `e^{-pi (N+1)^2 + 2 pi (N+1) y_max}` and the
/// tail is geometrically dominated.
pub fn truncation_tail_bound(y_max: f64) -> f64 {
    let n = (N_TRUNC + 1) as f64;
    2.0 * (-PI * n * n + 2.0 * PI * n * y_max).exp() / (1.0 - (-2.0 * PI).exp())
}

/// `theta(z)` together with its first two `z`-derivatives.
pub fn theta_eval(z: Complex64) -> (Complex64, Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut d1 = Complex64::new(0.0, 0.0);
    let mut d2 = Complex64::new(0.0, 0.0);
    for n in -N_TRUNC..=N_TRUNC {
        let nf = n as f64;
        let amp = (-PI * nf * nf).exp();
        let phase = Complex64::new(0.0, 2.0 * PI * nf) * z;
        let term = amp * phase.exp();
        let mult = Complex64::new(0.0, 2.0 * PI * nf);
        v += term;
        d1 += mult * term;
        d2 += mult * mult * term;
    }
    (v, d1, d2)
}

/// `|theta(z)|^2` and its independent x/y second-derivative data, computed
/// through the double series in `(n, m)` so the x- and y-routes share no
/// arithmetic. Returns `(P, P_x, P_y, P_xx, P_yy)`.
pub fn density_double_series(x: f64, y: f64) -> (f64, f64, f64, f64, f64) {
    let mut p = 0.0;
    let mut px = 0.0;
    let mut py = 0.0;
    let mut pxx = 0.0;
    let mut pyy = 0.0;
    for n in -N_TRUNC..=N_TRUNC {
        for m in -N_TRUNC..=N_TRUNC {
            let nf = n as f64;
            let mf = m as f64;
            let amp = (-PI * (nf * nf + mf * mf)).exp();
            let kx = 2.0 * PI * (nf - mf);
            let ky = -2.0 * PI * (nf + mf);
            let re = amp * (ky * y).exp();
            let (s, c) = (kx * x).sin_cos();
            p += re * c;
            px += -re * kx * s;
            py += re * ky * c;
            pxx += -re * kx * kx * c;
            pyy += re * ky * ky * c;
        }
    }
    (p, px, py, pxx, pyy)
}

/// Density of the degree-`d` canonical section at `(x, y)`, `d >= 1`:
/// `W = prod_j |theta(z - j/d)|^2 * e^{-2 pi d y^2}`.
pub fn density_at(d: u32, x: f64, y: f64) -> f64 {
    let z = Complex64::new(x, y);
    let mut prod = 1.0f64;
    for j in 0..d {
        let shift = j as f64 / d as f64;
        let (v, _, _) = theta_eval(z - Complex64::new(shift, 0.0));
        prod *= v.norm_sqr();
    }
    prod * (-2.0 * PI * d as f64 * y * y).exp()
}

/// `N x N` sample table of the density, row-major `(ix, iy)`.
pub fn density_table(d: u32, n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for ix in 0..n {
        for iy in 0..n {
            let x = ix as f64 / n as f64;
            let y = iy as f64 / n as f64;
            out[ix * n + iy] = density_at(d, x, y);
        }
    }
    out
}

/// `-1/2 Delta log W` at a point away from the zeros, with the Laplacian
/// assembled from the independent x/y routes of `density_double_series`.
/// Equals `-2 pi d` up to the numerical quality of the series evaluation.
pub fn half_log_laplacian(d: u32, x: f64, y: f64) -> f64 {
    let mut sum = 0.0f64;
    for j in 0..d {
        let shift = j as f64 / d as f64;
        let (p, px, py, pxx, pyy) = density_double_series(x - shift, y);
        // d^2/dx^2 log P + d^2/dy^2 log P
        sum += (pxx * p - px * px) / (p * p) + (pyy * p - py * py) / (p * p);
    }
    // metric part: d^2/dy^2 (-2 pi d y^2) = -4 pi d
    let flat = sum - 4.0 * PI * d as f64;
    // Delta = -(d_xx + d_yy); report -1/2 Delta log W
    0.5 * flat
}

/// Sup over grid points with `W > rel_floor * max W` of
/// `| -1/2 Delta log W + 2 pi d |`.
pub fn curvature_certificate(d: u32, n: usize, rel_floor: f64) -> f64 {
    let table = density_table(d, n);
    let max = table.iter().cloned().fold(0.0f64, f64::max);
    let mut worst = 0.0f64;
    for ix in 0..n {
        for iy in 0..n {
            if table[ix * n + iy] <= rel_floor * max {
                continue;
            }
            let x = ix as f64 / n as f64;
            let y = iy as f64 / n as f64;
            let v = half_log_laplacian(d, x, y) + 2.0 * PI * d as f64;
            worst = worst.max(v.abs());
        }
    }
    worst
}

/// Connected components of `{W < rel_floor * max W}` on the periodic grid.
pub fn count_zero_components(table: &[f64], n: usize, rel_floor: f64) -> usize {
    let max = table.iter().cloned().fold(0.0f64, f64::max);
    let cutoff = rel_floor * max;
    let mut seen = vec![false; n * n];
    let mut components = 0usize;
    for start in 0..n * n {
        if seen[start] || table[start] >= cutoff {
            continue;
        }
        components += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(p) = stack.pop() {
            let (ix, iy) = (p / n, p % n);
            let neighbours = [
                ((ix + 1) % n) * n + iy,
                ((ix + n - 1) % n) * n + iy,
                ix * n + (iy + 1) % n,
                ix * n + (iy + n - 1) % n,
            ];
            for q in neighbours {
                if !seen[q] && table[q] < cutoff {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    components
}

/// Grid position of the global density minimum.
pub fn min_location(table: &[f64], n: usize) -> (usize, usize) {
    let mut best = (0usize, 0usize);
    let mut val = f64::INFINITY;
    for ix in 0..n {
        for iy in 0..n {
            if table[ix * n + iy] < val {
                val = table[ix * n + iy];
                best = (ix, iy);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_bound_is_tiny() {
        assert!(truncation_tail_bound(1.5) < 1e-14);
    }

    #[test]
    fn theta_is_x_periodic_exactly_and_y_periodic_by_automorphy() {
        for (x, y) in [(0.13, 0.7), (0.5, 0.25), (0.91, 0.05)] {
            let w0 = density_at(1, x, y);
            let w1 = density_at(1, x + 1.0, y);
            let w2 = density_at(1, x, y + 1.0);
            assert!((w0 - w1).abs() <= 1e-12 * w0.max(1.0));
            assert!((w0 - w2).abs() <= 1e-12 * w0.max(1.0));
        }
    }

    #[test]
    fn single_zero_at_half_lattice() {
        let n = 128;
        let table = density_table(1, n);
        assert_eq!(count_zero_components(&table, n, 1e-3), 1);
        let (ix, iy) = min_location(&table, n);
        assert_eq!((ix, iy), (n / 2, n / 2));
    }

    #[test]
    fn zero_count_matches_degree() {
        let n = 128;
        for d in [1u32, 2, 3] {
            let table = density_table(d, n);
            assert_eq!(count_zero_components(&table, n, 1e-3) as u32, d, "degree {}", d);
        }
    }

    #[test]
    fn curvature_certificate_small() {
        for d in [1u32, 2] {
            let worst = curvature_certificate(d, 128, 1e-3);
            assert!(worst < 1e-6, "degree {}: certificate {}", d, worst);
        }
    }

    #[test]
    fn vortex_zeros_are_quadratic() {
        // W ~ c r^2 near the zero: W(z0 + delta)/|delta|^2 stabilises
        let d = 1u32;
        let (x0, y0) = (0.5, 0.5);
        let mut ratios = Vec::new();
        for k in 1..=4 {
            let delta = 1e-3 * k as f64;
            let w = density_at(d, x0 + delta, y0);
            ratios.push(w / (delta * delta));
        }
        for pair in ratios.windows(2) {
            assert!((pair[0] - pair[1]).abs() < 0.01 * pair[0]);
        }
    }
}
