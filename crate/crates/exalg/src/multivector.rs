//! Exact complex differential forms at a point, in anticommutative normal form.
//!
//! A `MultiVector` lives on a fiber with `dim` orthonormal real covectors
//! `e_0, ..., e_{dim-1}` and stores one `ExactScalar` per monomial subset,
//! with subsets kept sorted and signs absorbed into the coefficients. When
//! the fiber carries the standard complex structure (`dim = 2n`), covector
//! `2k` is `dx_{k+1}` and covector `2k+1` is `dy_{k+1}`, with `dz = dx + i dy`
//! and the metric normalisation `|dz|^2 = 2`. The orientation is fixed as
//! `dvol = e_0 ^ e_1 ^ ... ^ e_{dim-1} = dx_1 ^ dy_1 ^ ... ^ dx_n ^ dy_n`.

use crate::scalar::ExactScalar;
use crate::ExalgError;
use std::collections::BTreeMap;
use std::fmt;

pub type Mask = u32;

/// Exact exterior-algebra element over `dim <= 8` real covectors.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiVector {
    dim: u8,
    coeffs: BTreeMap<Mask, ExactScalar>,
}

/// Sign of the permutation sorting the concatenation `sorted(a), sorted(b)`
/// when `a` and `b` are disjoint: counts pairs `(i in a, j in b)` with `i > j`.
pub fn merge_sign(a: Mask, b: Mask) -> i32 {
    let mut sign = 1i32;
    let mut bits = a;
    while bits != 0 {
        let i = bits.trailing_zeros();
        bits &= bits - 1;
        let below = b & ((1u32 << i) - 1);
        if below.count_ones() % 2 == 1 {
            sign = -sign;
        }
    }
    sign
}

impl MultiVector {
    pub fn zero(dim: u8) -> Self {
        assert!(dim >= 1 && dim <= 8, "fiber dimension must be 1..=8");
        MultiVector { dim, coeffs: BTreeMap::new() }
    }

    /// Zero form on the complex fiber C^n (2n real covectors).
    pub fn zero_complex(n: u8) -> Self {
        assert!(n >= 1 && n <= 4, "complex dimension must be 1..=4");
        MultiVector::zero(2 * n)
    }

    pub fn scalar(dim: u8, value: ExactScalar) -> Self {
        let mut m = MultiVector::zero(dim);
        m.add_term(0, value);
        m
    }

    pub fn one(dim: u8) -> Self {
        MultiVector::scalar(dim, ExactScalar::one())
    }

    /// Basis covector `e_idx`.
    pub fn covector(dim: u8, idx: u8) -> Self {
        assert!(idx < dim);
        let mut m = MultiVector::zero(dim);
        m.add_term(1 << idx, ExactScalar::one());
        m
    }

    /// A single monomial `e_S` with the given coefficient.
    pub fn monomial(dim: u8, mask: Mask, value: ExactScalar) -> Self {
        assert!(mask < (1 << dim));
        let mut m = MultiVector::zero(dim);
        m.add_term(mask, value);
        m
    }

    /// `dx_k` on C^n, `k` is 1-based.
    pub fn dx(n: u8, k: u8) -> Self {
        assert!(k >= 1 && k <= n);
        MultiVector::covector(2 * n, 2 * (k - 1))
    }

    /// `dy_k` on C^n, `k` is 1-based.
    pub fn dy(n: u8, k: u8) -> Self {
        assert!(k >= 1 && k <= n);
        MultiVector::covector(2 * n, 2 * (k - 1) + 1)
    }

    /// `dz_k = dx_k + i dy_k`.
    pub fn dz(n: u8, k: u8) -> Self {
        MultiVector::dx(n, k) + MultiVector::dy(n, k).scale(&ExactScalar::i())
    }

    /// `dzbar_k = dx_k - i dy_k`.
    pub fn dzbar(n: u8, k: u8) -> Self {
        MultiVector::dx(n, k) - MultiVector::dy(n, k).scale(&ExactScalar::i())
    }

    /// Wedge product of `dzbar_k` over a set of 1-based indices, ascending.
    pub fn dzbar_monomial(n: u8, indices: &[u8]) -> Self {
        let mut acc = MultiVector::one(2 * n);
        for &k in indices {
            acc = acc.wedge(&MultiVector::dzbar(n, k)).unwrap();
        }
        acc
    }

    /// The Kaehler form `omega = sum_k dx_k ^ dy_k` on C^n.
    pub fn omega(n: u8) -> Self {
        let mut m = MultiVector::zero(2 * n);
        for k in 0..n {
            m.add_term((1 << (2 * k)) | (1 << (2 * k + 1)), ExactScalar::one());
        }
        m
    }

    /// The volume monomial `e_0 ^ ... ^ e_{dim-1}`.
    pub fn dvol(dim: u8) -> Self {
        MultiVector::monomial(dim, (1u32 << dim) - 1, ExactScalar::one())
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &ExactScalar)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: Mask) -> ExactScalar {
        self.coeffs.get(&mask).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn add_term(&mut self, mask: Mask, value: ExactScalar) {
        if value.is_zero() {
            return;
        }
        match self.coeffs.entry(mask) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + value;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        if s.is_zero() {
            return MultiVector::zero(self.dim);
        }
        let mut out = MultiVector::zero(self.dim);
        for (m, c) in &self.coeffs {
            out.add_term(*m, c.clone() * s.clone());
        }
        out
    }

    /// Degree when the form is homogeneous; error on mixed-degree input.
    pub fn degree(&self) -> Result<u8, ExalgError> {
        let mut deg = None;
        for m in self.coeffs.keys() {
            let d = m.count_ones() as u8;
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return Err(ExalgError::MixedDegree),
                _ => {}
            }
        }
        Ok(deg.unwrap_or(0))
    }

    /// The degree-`k` part.
    pub fn grade(&self, k: u8) -> Self {
        let mut out = MultiVector::zero(self.dim);
        for (m, c) in &self.coeffs {
            if m.count_ones() as u8 == k {
                out.add_term(*m, c.clone());
            }
        }
        out
    }

    pub fn max_degree(&self) -> u8 {
        self.coeffs.keys().map(|m| m.count_ones() as u8).max().unwrap_or(0)
    }

    /// Exterior product.
    pub fn wedge(&self, other: &MultiVector) -> Result<MultiVector, ExalgError> {
        if self.dim != other.dim {
            return Err(ExalgError::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = MultiVector::zero(self.dim);
        for (ma, ca) in &self.coeffs {
            for (mb, cb) in &other.coeffs {
                if ma & mb != 0 {
                    continue;
                }
                let sign = merge_sign(*ma, *mb);
                let mut c = ca.clone() * cb.clone();
                if sign < 0 {
                    c = -c;
                }
                out.add_term(ma | mb, c);
            }
        }
        Ok(out)
    }

    /// Complex conjugation (coefficients conjugate; real monomials are fixed).
    pub fn conj(&self) -> Self {
        let mut out = MultiVector::zero(self.dim);
        for (m, c) in &self.coeffs {
            out.add_term(*m, c.conj());
        }
        out
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Hermitian inner product: real basis monomials are orthonormal, and the
    /// pairing is conjugate-linear in `other`.
    pub fn hermitian_inner(&self, other: &MultiVector) -> Result<ExactScalar, ExalgError> {
        if self.dim != other.dim {
            return Err(ExalgError::DimensionMismatch(self.dim, other.dim));
        }
        let mut acc = ExactScalar::zero();
        for (m, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(m) {
                acc += c.clone() * d.conj();
            }
        }
        Ok(acc)
    }

    /// Interior product against a degree-1 form `alpha`, with the Hermitian
    /// pairing `<e_i, alpha>` (conjugate-linear in `alpha`). Acts as an
    /// anti-derivation of degree -1:
    /// `alpha _| (x ^ y) = (alpha _| x) ^ y + (-1)^{deg x} x ^ (alpha _| y)`.
    pub fn contract(alpha: &MultiVector, xi: &MultiVector) -> Result<MultiVector, ExalgError> {
        if alpha.dim != xi.dim {
            return Err(ExalgError::DimensionMismatch(alpha.dim, xi.dim));
        }
        if alpha.degree() != Ok(1) || alpha.is_zero() {
            return Err(ExalgError::WrongDegree {
                expected: 1,
                got: alpha.max_degree(),
            });
        }
        let mut out = MultiVector::zero(xi.dim);
        for (m, c) in &xi.coeffs {
            let mut pos = 0u32; // one-based position parity tracker
            let mut bits = *m;
            while bits != 0 {
                let idx = bits.trailing_zeros();
                bits &= bits - 1;
                let pairing = alpha.coeffs.get(&(1 << idx)).map(|a| a.conj());
                if let Some(p) = pairing {
                    let mut term = c.clone() * p;
                    if pos % 2 == 1 {
                        term = -term;
                    }
                    out.add_term(m & !(1 << idx), term);
                }
                pos += 1;
            }
        }
        Ok(out)
    }

    /// Complex-linear Hodge star for the standard metric and the orientation
    /// `dvol = e_0 ^ ... ^ e_{dim-1}`.
    pub fn hodge_star(&self) -> Self {
        let full: Mask = (1u32 << self.dim) - 1;
        let mut out = MultiVector::zero(self.dim);
        for (m, c) in &self.coeffs {
            let comp = full & !m;
            let sign = merge_sign(*m, comp);
            let mut v = c.clone();
            if sign < 0 {
                v = -v;
            }
            out.add_term(comp, v);
        }
        out
    }

    /// Star of a single real monomial: `(complement mask, sign)`.
    pub fn star_monomial(dim: u8, mask: Mask) -> (Mask, i32) {
        let full: Mask = (1u32 << dim) - 1;
        let comp = full & !mask;
        (comp, merge_sign(mask, comp))
    }

    /// Expansion in the complex monomial basis `dz_P ^ dzbar_Q` where `P`/`Q`
    /// are 0-based index masks and factors are ordered all-`dz`-ascending then
    /// all-`dzbar`-ascending. Only valid on complex fibers (`dim = 2n`).
    pub fn to_complex_basis(&self) -> Result<BTreeMap<(Mask, Mask), ExactScalar>, ExalgError> {
        let n = self.complex_dim()?;
        let half = ExactScalar::ratio(1, 2);
        // dx_k = (dz_k + dzbar_k)/2, dy_k = -i/2 (dz_k - dzbar_k)
        let minus_i_half = ExactScalar::ratio_i(-1, 2);
        let mut acc: BTreeMap<(Mask, Mask), ExactScalar> = BTreeMap::new();
        for (m, c) in &self.coeffs {
            // expand e_S over the 2^|S| choices of dz/dzbar per factor
            let mut partial: Vec<(Mask, Mask, ExactScalar)> = vec![(0, 0, c.clone())];
            // iterate covectors of S in ascending order
            let mut bits = *m;
            while bits != 0 {
                let idx = bits.trailing_zeros() as u8;
                bits &= bits - 1;
                let k = idx / 2; // complex index, 0-based
                let is_dx = idx % 2 == 0;
                let mut next = Vec::with_capacity(partial.len() * 2);
                for (p, q, coeff) in &partial {
                    // append dz_k
                    let cz = if is_dx { half.clone() } else { minus_i_half.clone() };
                    if p & (1 << k) == 0 {
                        let sign = czbar_order_sign(*p, *q, k, true);
                        let mut v = coeff.clone() * cz;
                        if sign < 0 {
                            v = -v;
                        }
                        next.push((p | (1 << k), *q, v));
                    }
                    // append dzbar_k
                    let czb = if is_dx { half.clone() } else { -minus_i_half.clone() };
                    if q & (1 << k) == 0 {
                        let sign = czbar_order_sign(*p, *q, k, false);
                        let mut v = coeff.clone() * czb;
                        if sign < 0 {
                            v = -v;
                        }
                        next.push((*p, q | (1 << k), v));
                    }
                }
                partial = next;
            }
            for (p, q, v) in partial {
                if v.is_zero() {
                    continue;
                }
                let e = acc.entry((p, q)).or_insert_with(ExactScalar::zero);
                *e += v;
                if e.is_zero() {
                    acc.remove(&(p, q));
                }
            }
        }
        let _ = n;
        Ok(acc)
    }

    /// Inverse of [`to_complex_basis`].
    pub fn from_complex_basis(
        n: u8,
        comps: &BTreeMap<(Mask, Mask), ExactScalar>,
    ) -> MultiVector {
        let mut out = MultiVector::zero(2 * n);
        for ((p, q), c) in comps {
            let mut mono = MultiVector::one(2 * n);
            for k in 0..n {
                if p & (1 << k) != 0 {
                    mono = mono.wedge(&MultiVector::dz(n, k + 1)).unwrap();
                }
            }
            for k in 0..n {
                if q & (1 << k) != 0 {
                    mono = mono.wedge(&MultiVector::dzbar(n, k + 1)).unwrap();
                }
            }
            out = out + mono.scale(c);
        }
        out
    }

    pub fn complex_dim(&self) -> Result<u8, ExalgError> {
        if self.dim % 2 != 0 {
            return Err(ExalgError::NotComplexFiber(self.dim));
        }
        Ok(self.dim / 2)
    }
}

/// Sign for appending one `dz_k` (when `into_p`) or `dzbar_k` factor to the
/// canonical word `dz_{p...} ^ dzbar_{q...}`: counts the factors it must move
/// past to reach its slot.
fn czbar_order_sign(p: Mask, q: Mask, k: u8, into_p: bool) -> i32 {
    let swaps = if into_p {
        // passes P-factors above k, then all Q factors
        (p & !((1u32 << (k + 1)) - 1)).count_ones() + q.count_ones()
    } else {
        (q & !((1u32 << (k + 1)) - 1)).count_ones()
    };
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

impl std::ops::Add for MultiVector {
    type Output = MultiVector;
    fn add(self, rhs: MultiVector) -> MultiVector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in add");
        let mut out = self;
        for (m, c) in rhs.coeffs {
            out.add_term(m, c);
        }
        out
    }
}

impl std::ops::Sub for MultiVector {
    type Output = MultiVector;
    fn sub(self, rhs: MultiVector) -> MultiVector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in sub");
        let mut out = self;
        for (m, c) in rhs.coeffs {
            out.add_term(m, -c);
        }
        out
    }
}

impl std::ops::Neg for MultiVector {
    type Output = MultiVector;
    fn neg(self) -> MultiVector {
        let mut out = MultiVector::zero(self.dim);
        for (m, c) in self.coeffs {
            out.add_term(m, -c);
        }
        out
    }
}

impl fmt::Debug for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?})", c)?;
            if *m != 0 {
                for i in 0..self.dim {
                    if m & (1 << i) != 0 {
                        let (k, part) = (i / 2 + 1, if i % 2 == 0 { "dx" } else { "dy" });
                        if self.dim % 2 == 0 {
                            write!(f, " {}{}", part, k)?;
                        } else {
                            write!(f, " e{}", i)?;
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
