//! Dense exact matrices over Q(i, sqrt(2)); just enough linear algebra for
//! the spin representations: products, exact rank, and solving the quadratic
//! -term identification systems.

use exalg::ExactScalar;

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMat {
    rows: usize,
    cols: usize,
    data: Vec<ExactScalar>,
}

impl ExactMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMat {
            rows,
            cols,
            data: vec![ExactScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, ExactScalar::one());
        }
        m
    }

    pub fn diag(entries: &[ExactScalar]) -> Self {
        let mut m = ExactMat::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExactScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, rhs: &ExactMat) -> ExactMat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = ExactMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &ExactMat) -> ExactMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b.clone();
        }
        out
    }

    pub fn sub(&self, rhs: &ExactMat) -> ExactMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a -= b.clone();
        }
        out
    }

    pub fn scale(&self, s: &ExactScalar) -> ExactMat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s.clone();
        }
        out
    }

    pub fn neg(&self) -> ExactMat {
        self.scale(&-ExactScalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn apply(&self, v: &[ExactScalar]) -> Vec<ExactScalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = ExactScalar::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += a.clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> ExactScalar {
        assert_eq!(self.rows, self.cols);
        let mut acc = ExactScalar::zero();
        for i in 0..self.rows {
            acc += self.get(i, i).clone();
        }
        acc
    }

    /// Submatrix block `[r0, r1) x [c0, c1)`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> ExactMat {
        let mut out = ExactMat::zeros(r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                out.set(i - r0, j - c0, self.get(i, j).clone());
            }
        }
        out
    }

    /// Skew-Hermitian with respect to the weighted inner product
    /// `<u, v> = sum_k w_k u_k conj(v_k)`: checks `w_i A_ij = -conj(A_ji) w_j`.
    pub fn is_skew_hermitian(&self, weights: &[i64]) -> bool {
        assert_eq!(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let lhs = self.get(i, j).clone() * ExactScalar::from_int(weights[i]);
                let rhs = -self.get(j, i).conj() * ExactScalar::from_int(weights[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Hermitian with respect to the weighted inner product.
    pub fn is_hermitian(&self, weights: &[i64]) -> bool {
        assert_eq!(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let lhs = self.get(i, j).clone() * ExactScalar::from_int(weights[i]);
                let rhs = self.get(j, i).conj() * ExactScalar::from_int(weights[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..m.cols {
            // find a pivot
            let pivot = (row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            let inv = m.get(row, col).clone().inv();
            for j in col..m.cols {
                let v = m.get(row, j).clone() * inv.clone();
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let f = m.get(r, col).clone();
                    for j in col..m.cols {
                        let v = m.get(r, j).clone() - f.clone() * m.get(row, j).clone();
                        m.set(r, j, v);
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact inverse; panics if singular (callers only invert matrices whose
    /// invertibility is guaranteed by a rank check).
    pub fn inverse(&self) -> ExactMat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = ExactMat::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m.get(r, col).is_zero())
                .expect("singular matrix in inverse()");
            m.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let f = m.get(col, col).clone().inv();
            for j in 0..n {
                let v = m.get(col, j).clone() * f.clone();
                m.set(col, j, v);
                let v = inv.get(col, j).clone() * f.clone();
                inv.set(col, j, v);
            }
            for r in 0..n {
                if r != col && !m.get(r, col).is_zero() {
                    let g = m.get(r, col).clone();
                    for j in 0..n {
                        let v = m.get(r, j).clone() - g.clone() * m.get(col, j).clone();
                        m.set(r, j, v);
                        let v = inv.get(r, j).clone() - g.clone() * inv.get(col, j).clone();
                        inv.set(r, j, v);
                    }
                }
            }
        }
        inv
    }
}

impl std::fmt::Debug for ExactMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ExactMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?}  ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
