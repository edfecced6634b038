use spectral::{kw_solve, KwOptions, KwProblem, NdFft, ScalarField, TorusGrid};
use num_complex::Complex64;
use std::time::Instant;

fn main() {
    // 16^6 FFT timing
    let dims = vec![16usize; 6];
    let total: usize = dims.iter().product();
    let mut data: Vec<Complex64> = (0..total).map(|i| Complex64::new((i % 31) as f64, 0.0)).collect();
    let mut fft = NdFft::new(&dims);
    let t = Instant::now();
    fft.forward(&mut data);
    println!("16^6 forward: {:.2?}", t.elapsed());
    let t = Instant::now();
    fft.inverse(&mut data);
    println!("16^6 inverse: {:.2?}", t.elapsed());

    // 8^8 FFT timing
    let dims = vec![8usize; 8];
    let total: usize = dims.iter().product();
    let mut data: Vec<Complex64> = (0..total).map(|i| Complex64::new((i % 31) as f64, 0.0)).collect();
    let mut fft = NdFft::new(&dims);
    let t = Instant::now();
    fft.forward(&mut data);
    println!("8^8 forward: {:.2?}", t.elapsed());

    // KW solve on T^6 at 8/axis with product weight
    let grid = TorusGrid::torus_2n(3, 8).unwrap();
    let w = ScalarField::from_fn(&grid, |x| {
        let f = |a: f64, b: f64| {
            let tp = 2.0 * std::f64::consts::PI;
            ((tp * (a - 0.5)).sin().powi(2) + (tp * (b - 0.5)).sin().powi(2)) * 1.3
        };
        f(x[0], x[1]) * f(x[2], x[3]) * f(x[4], x[5]) / 8.0
    });
    let p = KwProblem { w, kappa: 6.0, c: std::f64::consts::PI };
    let t = Instant::now();
    let (u, diag) = kw_solve(&p, &KwOptions::default()).unwrap();
    println!("8^6 KW solve: {:.2?}, newton {}, cg {}, res {:.2e}", t.elapsed(), diag.newton_iterations, diag.cg_iterations, diag.final_residual_sup);
    println!("u range [{:.3}, {:.3}]", u.min(), u.max());

    // KW at 16^6 warm-started from 8^6
    let fine = TorusGrid::torus_2n(3, 16).unwrap();
    let wf = ScalarField::from_fn(&fine, |x| {
        let f = |a: f64, b: f64| {
            let tp = 2.0 * std::f64::consts::PI;
            ((tp * (a - 0.5)).sin().powi(2) + (tp * (b - 0.5)).sin().powi(2)) * 1.3
        };
        f(x[0], x[1]) * f(x[2], x[3]) * f(x[4], x[5]) / 8.0
    });
    let init = spectral::synthesize(&spectral::zero_pad(&spectral::analyze(&u), &fine).unwrap());
    let p = KwProblem { w: wf, kappa: 6.0, c: std::f64::consts::PI };
    let t = Instant::now();
    let (_, diag) = kw_solve(&p, &KwOptions { initial: Some(init), ..Default::default() }).unwrap();
    println!("16^6 KW warm solve: {:.2?}, newton {}, cg {}, res {:.2e}", t.elapsed(), diag.newton_iterations, diag.cg_iterations, diag.final_residual_sup);
}
