//! N-dimensional FFT over row-major complex arrays.
//!
//! Each axis pass transforms the (contiguous) last axis in one batched call,
//! then rotates the layout so the next axis becomes contiguous; after `ndim`
//! passes the layout is back to row-major and every axis has been
//! transformed. The rotation is a blocked 2D transpose, which keeps the whole
//! transform memory-bandwidth bound rather than stride bound.

use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};
use std::sync::Arc;

pub struct NdFft {
    dims: Vec<usize>,
    forward: Vec<Arc<dyn Fft<f64>>>,
    inverse: Vec<Arc<dyn Fft<f64>>>,
    scratch: Vec<Complex64>,
    fft_scratch: Vec<Complex64>,
}

impl NdFft {
    pub fn new(dims: &[usize]) -> Self {
        let mut planner = FftPlanner::new();
        // plans per pass: pass p transforms axis (ndim - 1 - p) of the input
        let mut forward = Vec::new();
        let mut inverse = Vec::new();
        let mut max_scratch = 0usize;
        for p in 0..dims.len() {
            let axis_len = dims[dims.len() - 1 - p];
            let f = planner.plan_fft(axis_len, FftDirection::Forward);
            let b = planner.plan_fft(axis_len, FftDirection::Inverse);
            max_scratch = max_scratch
                .max(f.get_inplace_scratch_len())
                .max(b.get_inplace_scratch_len());
            forward.push(f);
            inverse.push(b);
        }
        let total: usize = dims.iter().product();
        NdFft {
            dims: dims.to_vec(),
            forward,
            inverse,
            scratch: vec![Complex64::new(0.0, 0.0); total],
            fft_scratch: vec![Complex64::new(0.0, 0.0); max_scratch],
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    fn run(&mut self, data: &mut [Complex64], inverse: bool) {
        let n = self.dims.len();
        let total = data.len();
        debug_assert_eq!(total, self.dims.iter().product::<usize>());
        let mut cur = self.dims.clone();
        for p in 0..n {
            let plan = if inverse { &self.inverse[p] } else { &self.forward[p] };
            debug_assert_eq!(plan.len(), *cur.last().unwrap());
            plan.process_with_scratch(data, &mut self.fft_scratch);
            // rotate layout: last axis to the front
            let cols = *cur.last().unwrap();
            let rows = total / cols;
            transpose(data, &mut self.scratch, rows, cols);
            data.copy_from_slice(&self.scratch);
            cur.rotate_right(1);
        }
        debug_assert_eq!(cur, self.dims);
    }

    /// Unnormalised forward transform in place.
    pub fn forward(&mut self, data: &mut [Complex64]) {
        self.run(data, false);
    }

    /// Unnormalised inverse transform in place (scale by `1/len` outside to
    /// recover samples from raw forward output).
    pub fn inverse(&mut self, data: &mut [Complex64]) {
        self.run(data, true);
    }
}

/// `dst[c * rows + r] = src[r * cols + c]`, blocked for cache locality.
fn transpose(src: &[Complex64], dst: &mut [Complex64], rows: usize, cols: usize) {
    const B: usize = 64;
    for r0 in (0..rows).step_by(B) {
        let r1 = (r0 + B).min(rows);
        for c0 in (0..cols).step_by(B) {
            let c1 = (c0 + B).min(cols);
            for r in r0..r1 {
                for c in c0..c1 {
                    dst[c * rows + r] = src[r * cols + c];
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_3d() {
        let dims = [8usize, 4, 6];
        let total: usize = dims.iter().product();
        let mut data: Vec<Complex64> = (0..total)
            .map(|i| Complex64::new((i % 17) as f64 * 0.3 - 1.0, ((i * 7) % 13) as f64 * 0.1))
            .collect();
        let orig = data.clone();
        let mut fft = NdFft::new(&dims);
        fft.forward(&mut data);
        fft.inverse(&mut data);
        let scale = 1.0 / total as f64;
        for (a, b) in data.iter().zip(&orig) {
            assert!((a * scale - b).norm() < 1e-12);
        }
    }

    #[test]
    fn single_mode_lands_in_the_right_bin() {
        // u(x, y) = exp(2 pi i (2x - y)) on a 8x8 grid
        let dims = [8usize, 8];
        let mut data = vec![Complex64::new(0.0, 0.0); 64];
        for ix in 0..8 {
            for iy in 0..8 {
                let x = ix as f64 / 8.0;
                let y = iy as f64 / 8.0;
                let phase = 2.0 * std::f64::consts::PI * (2.0 * x - y);
                data[ix * 8 + iy] = Complex64::new(phase.cos(), phase.sin());
            }
        }
        let mut fft = NdFft::new(&dims);
        fft.forward(&mut data);
        for ix in 0..8usize {
            for iy in 0..8usize {
                let v = data[ix * 8 + iy] / 64.0;
                let expected = if ix == 2 && iy == 7 { 1.0 } else { 0.0 };
                assert!(
                    (v - Complex64::new(expected, 0.0)).norm() < 1e-12,
                    "bin ({}, {}) = {}",
                    ix,
                    iy,
                    v
                );
            }
        }
    }
}
