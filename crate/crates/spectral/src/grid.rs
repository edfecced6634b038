//! Flat-torus sample grids with unit period per coordinate.

use crate::SpectralError;

/// Default cap on total sample count (about 33.5M points, sized so the
/// largest production grids -- 16 per axis on T^6, 8 per axis on T^8 -- fit
/// comfortably in memory together with solver workspace).
pub const DEFAULT_POINT_BUDGET: usize = 1 << 25;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorusGrid {
    dims: Vec<usize>,
}

impl TorusGrid {
    pub fn new(dims: Vec<usize>) -> Result<Self, SpectralError> {
        Self::with_budget(dims, DEFAULT_POINT_BUDGET)
    }

    pub fn with_budget(dims: Vec<usize>, budget: usize) -> Result<Self, SpectralError> {
        if dims.is_empty() {
            return Err(SpectralError::BadGrid("no axes".into()));
        }
        let mut total: usize = 1;
        for &d in &dims {
            if d < 8 {
                return Err(SpectralError::BadGrid(format!(
                    "axis size {} below the minimum of 8",
                    d
                )));
            }
            if d % 2 != 0 {
                return Err(SpectralError::BadGrid(format!("axis size {} is odd", d)));
            }
            total = total
                .checked_mul(d)
                .ok_or_else(|| SpectralError::BadGrid("grid size overflow".into()))?;
        }
        if total > budget {
            return Err(SpectralError::GridTooLarge { points: total, budget });
        }
        Ok(TorusGrid { dims })
    }

    /// `T^{2n}` grid with the same sample count on every axis, axes ordered
    /// `x_1, y_1, ..., x_n, y_n`.
    pub fn torus_2n(n: usize, samples_per_axis: usize) -> Result<Self, SpectralError> {
        TorusGrid::new(vec![samples_per_axis; 2 * n])
    }

    pub fn torus_2n_with_budget(
        n: usize,
        samples_per_axis: usize,
        budget: usize,
    ) -> Result<Self, SpectralError> {
        TorusGrid::with_budget(vec![samples_per_axis; 2 * n], budget)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn ndim(&self) -> usize {
        self.dims.len()
    }

    /// Complex dimension when the grid models `T^{2n}`.
    pub fn complex_dim(&self) -> Option<usize> {
        if self.dims.len() % 2 == 0 {
            Some(self.dims.len() / 2)
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Signed integer wavenumber for index `idx` on an axis of size `n`.
    pub fn wavenumber(idx: usize, n: usize) -> i64 {
        if idx <= n / 2 {
            idx as i64
        } else {
            idx as i64 - n as i64
        }
    }

    /// Iterate multi-indices in row-major order, calling `f(linear, indices)`.
    pub fn for_each_index(&self, mut f: impl FnMut(usize, &[usize])) {
        let mut idx = vec![0usize; self.dims.len()];
        for linear in 0..self.len() {
            f(linear, &idx);
            for ax in (0..self.dims.len()).rev() {
                idx[ax] += 1;
                if idx[ax] < self.dims[ax] {
                    break;
                }
                idx[ax] = 0;
            }
        }
    }

    /// Coordinates in `[0,1)` of the sample with the given multi-index.
    pub fn coords(&self, indices: &[usize]) -> Vec<f64> {
        indices
            .iter()
            .zip(&self.dims)
            .map(|(&i, &n)| i as f64 / n as f64)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_odd_and_oversized() {
        assert!(TorusGrid::new(vec![4, 8]).is_err());
        assert!(TorusGrid::new(vec![9, 8]).is_err());
        assert!(TorusGrid::with_budget(vec![1024, 1024], 1 << 10).is_err());
        assert!(TorusGrid::new(vec![12, 12]).is_ok());
    }

    #[test]
    fn wavenumbers_wrap() {
        assert_eq!(TorusGrid::wavenumber(0, 8), 0);
        assert_eq!(TorusGrid::wavenumber(3, 8), 3);
        assert_eq!(TorusGrid::wavenumber(4, 8), 4);
        assert_eq!(TorusGrid::wavenumber(5, 8), -3);
        assert_eq!(TorusGrid::wavenumber(7, 8), -1);
    }
}
