//! Spin representations in dimensions 5, 6 and 8.
//!
//! For dimensions 6 and 8 the module is the full anti-holomorphic exterior
//! algebra `Lambda^{0,*}(C^n)` (n = 3, 4) with Clifford action of a one-form
//! `alpha` given by `c(alpha) xi = sqrt(2) (alpha^{0,1} ^ xi - conj(alpha^{1,0}) _| xi)`,
//! extended to higher forms multiplicatively over orthonormal monomials.
//! Positive spinors are the even block, negative spinors the odd block.
//!
//! The 5-dimensional module is the rank-4 graded tensor product
//! `(Lambda^{0,0} + Lambda^{0,1})(C) (x) C^2` with basis
//! `1(x)e1, 1(x)e2, dzbar(x)e1, dzbar(x)e2`: covectors of the complex factor
//! act by the formula above tensored with the identity, and the three flat
//! directions act through the chirality grading of the complex factor times
//! fixed 2x2 matrices. Cross-term signs are pinned down by requiring the
//! Clifford relations, `i^3 c(dvol) = 1`, and the diagonal actions of
//! `i omega`, `i dx1^dx2` and `omega^dx1^dx2` on the four line summands.

use crate::matrix::ExactMat;
use crate::CliffordError;
use exalg::{pq_split, ExactScalar, Mask, MultiVector};
use std::sync::OnceLock;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum SpinDim {
    Five,
    Six,
    Eight,
}

impl SpinDim {
    /// Number of real covectors of the underlying fiber.
    pub fn fiber_dim(&self) -> u8 {
        match self {
            SpinDim::Five => 5,
            SpinDim::Six => 6,
            SpinDim::Eight => 8,
        }
    }

    pub fn complex_dim(&self) -> Option<u8> {
        match self {
            SpinDim::Five => None,
            SpinDim::Six => Some(3),
            SpinDim::Eight => Some(4),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Chirality {
    Plus,
    Minus,
    /// The 5d module does not split.
    Full,
}

/// One basis element of the spinor module: a `dzbar` index mask together
/// with the sign relating the conventional ordering to the sorted monomial
/// (e.g. `dzbar3 ^ dzbar1 = -(dzbar1 ^ dzbar3)`), and for the 5d module the
/// `C^2` slot.
#[derive(Clone, Copy, Debug)]
pub struct BasisElement {
    pub zbar_mask: Mask,
    pub sign: i8,
    pub c2_slot: u8,
}

pub struct FiberRep {
    pub dim: SpinDim,
    /// Full module rank: 8 (6d), 16 (8d), 4 (5d).
    pub rank: usize,
    pub basis: Vec<BasisElement>,
    /// Hermitian weights `2^degree` of the basis elements.
    pub weights: Vec<i64>,
    /// `c(e_mu)` on the full module, `mu` in fiber covector order.
    pub generators: Vec<ExactMat>,
    /// Rows/cols `[0, even_rank)` form the even (positive) block.
    pub even_rank: usize,
}

impl FiberRep {
    pub fn get(dim: SpinDim) -> &'static FiberRep {
        static SIX: OnceLock<FiberRep> = OnceLock::new();
        static EIGHT: OnceLock<FiberRep> = OnceLock::new();
        static FIVE: OnceLock<FiberRep> = OnceLock::new();
        match dim {
            SpinDim::Six => SIX.get_or_init(|| FiberRep::build_kaehler(SpinDim::Six)),
            SpinDim::Eight => EIGHT.get_or_init(|| FiberRep::build_kaehler(SpinDim::Eight)),
            SpinDim::Five => FIVE.get_or_init(FiberRep::build_five),
        }
    }

    fn build_kaehler(dim: SpinDim) -> FiberRep {
        let n = dim.complex_dim().unwrap();
        let basis = kaehler_basis(n);
        let even_rank = basis.iter().filter(|b| b.zbar_mask.count_ones() % 2 == 0).count();
        let weights = basis
            .iter()
            .map(|b| 1i64 << b.zbar_mask.count_ones())
            .collect();
        let mut rep = FiberRep {
            dim,
            rank: basis.len(),
            basis,
            weights,
            generators: Vec::new(),
            even_rank,
        };
        let mut gens = Vec::new();
        for mu in 0..(2 * n) {
            let alpha = MultiVector::covector(2 * n, mu);
            let mut g = ExactMat::zeros(rep.rank, rep.rank);
            for (j, col) in (0..rep.rank).map(|j| (j, rep.basis_multivector(j))) {
                let image = clifford_one_form_on_form(&alpha, &col).unwrap();
                let coeffs = rep.form_to_coeffs(&image).expect("action stays anti-holomorphic");
                for (i, v) in coeffs.into_iter().enumerate() {
                    g.set(i, j, v);
                }
            }
            gens.push(g);
        }
        rep.generators = gens;
        rep
    }

    fn build_five() -> FiberRep {
        // sigma-factor generators on Lambda^{0,*}(C), basis [1, dzbar]
        let one = MultiVector::one(2);
        let zb = MultiVector::dzbar(1, 1);
        let sigma_basis = [one, zb];
        let mut sigma_gen = Vec::new();
        for mu in 0..2u8 {
            let alpha = MultiVector::covector(2, mu);
            let mut g = ExactMat::zeros(2, 2);
            for (j, b) in sigma_basis.iter().enumerate() {
                let image = clifford_one_form_on_form(&alpha, b).unwrap();
                // image = c0 * 1 + z * dzbar with dzbar = e0 - i e1
                let c0 = image.coeff(0);
                let z = image.coeff(0b01);
                debug_assert_eq!(image.coeff(0b10), -(z.clone() * ExactScalar::i()));
                g.set(0, j, c0);
                g.set(1, j, z);
            }
            sigma_gen.push(g);
        }

        // C^2-factor matrices for the three flat directions
        let i = ExactScalar::i();
        let c1 = mat2([
            ExactScalar::zero(),
            -i.clone(),
            -i.clone(),
            ExactScalar::zero(),
        ]);
        let c2 = mat2([
            ExactScalar::zero(),
            -ExactScalar::one(),
            ExactScalar::one(),
            ExactScalar::zero(),
        ]);
        let c3 = mat2([-i.clone(), ExactScalar::zero(), ExactScalar::zero(), i.clone()]);

        // basis order: 1(x)e1, 1(x)e2, dzbar(x)e1, dzbar(x)e2
        let basis = vec![
            BasisElement { zbar_mask: 0, sign: 1, c2_slot: 0 },
            BasisElement { zbar_mask: 0, sign: 1, c2_slot: 1 },
            BasisElement { zbar_mask: 1, sign: 1, c2_slot: 0 },
            BasisElement { zbar_mask: 1, sign: 1, c2_slot: 1 },
        ];
        let weights = vec![1, 1, 2, 2];

        let mut generators = Vec::new();
        // sigma covectors: c_sigma (x) Id
        for g in &sigma_gen {
            let mut full = ExactMat::zeros(4, 4);
            for a in 0..2 {
                for b in 0..2 {
                    for e in 0..2 {
                        full.set(2 * a + e, 2 * b + e, g.get(a, b).clone());
                    }
                }
            }
            generators.push(full);
        }
        // flat directions: epsilon (x) c_j, epsilon = diag(1, -1) on (1, dzbar)
        for cj in [&c1, &c2, &c3] {
            let mut full = ExactMat::zeros(4, 4);
            for a in 0..2usize {
                let eps = if a == 0 { ExactScalar::one() } else { -ExactScalar::one() };
                for e in 0..2 {
                    for e2 in 0..2 {
                        full.set(2 * a + e, 2 * a + e2, eps.clone() * cj.get(e, e2).clone());
                    }
                }
            }
            generators.push(full);
        }

        FiberRep {
            dim: SpinDim::Five,
            rank: 4,
            basis,
            weights,
            generators,
            even_rank: 4,
        }
    }

    /// The `j`-th basis element as a form (5d: of the complex factor only).
    pub fn basis_multivector(&self, j: usize) -> MultiVector {
        let b = &self.basis[j];
        let n = self.dim.complex_dim().unwrap_or(1);
        let indices: Vec<u8> = (0..n)
            .filter(|k| b.zbar_mask & (1 << k) != 0)
            .map(|k| k + 1)
            .collect();
        let m = MultiVector::dzbar_monomial(n, &indices);
        if b.sign < 0 {
            -m
        } else {
            m
        }
    }

    /// Expand an anti-holomorphic form over the module basis (6d/8d only).
    pub fn form_to_coeffs(&self, form: &MultiVector) -> Result<Vec<ExactScalar>, CliffordError> {
        let complex = form
            .to_complex_basis()
            .map_err(CliffordError::Algebra)?;
        let mut out = vec![ExactScalar::zero(); self.rank];
        for ((p, q), c) in complex {
            if p != 0 {
                return Err(CliffordError::NotAntiHolomorphic);
            }
            let j = self
                .basis
                .iter()
                .position(|b| b.zbar_mask == q && b.c2_slot == 0)
                .ok_or(CliffordError::NotAntiHolomorphic)?;
            out[j] = if self.basis[j].sign < 0 { -c } else { c };
        }
        Ok(out)
    }

    /// `c(F)` on the full module for a form on the fiber.
    pub fn clifford_matrix(&self, form: &MultiVector) -> Result<ExactMat, CliffordError> {
        if form.dim() != self.dim.fiber_dim() {
            return Err(CliffordError::Algebra(exalg::ExalgError::DimensionMismatch(
                form.dim(),
                self.dim.fiber_dim(),
            )));
        }
        let mut acc = ExactMat::zeros(self.rank, self.rank);
        for (mask, coeff) in form.terms() {
            let mut prod = ExactMat::identity(self.rank);
            for mu in 0..self.dim.fiber_dim() {
                if mask & (1 << mu) != 0 {
                    prod = prod.mul(&self.generators[mu as usize]);
                }
            }
            acc = acc.add(&prod.scale(coeff));
        }
        Ok(acc)
    }

    /// Even (positive-chirality) block of an even-form action.
    pub fn even_block(&self, m: &ExactMat) -> ExactMat {
        m.block(0, self.even_rank, 0, self.even_rank)
    }

    /// Odd (negative-chirality) block of an even-form action.
    pub fn odd_block(&self, m: &ExactMat) -> ExactMat {
        m.block(self.even_rank, self.rank, self.even_rank, self.rank)
    }

    pub fn weights_even(&self) -> &[i64] {
        &self.weights[..self.even_rank]
    }

    pub fn weights_odd(&self) -> &[i64] {
        &self.weights[self.even_rank..]
    }
}

fn mat2(entries: [ExactScalar; 4]) -> ExactMat {
    let mut m = ExactMat::zeros(2, 2);
    m.set(0, 0, entries[0].clone());
    m.set(0, 1, entries[1].clone());
    m.set(1, 0, entries[2].clone());
    m.set(1, 1, entries[3].clone());
    m
}

/// `c(alpha) xi` for a degree-1 `alpha` acting on an anti-holomorphic form.
pub fn clifford_one_form_on_form(
    alpha: &MultiVector,
    xi: &MultiVector,
) -> Result<MultiVector, CliffordError> {
    if alpha.degree() != Ok(1) || alpha.is_zero() {
        return Err(CliffordError::Algebra(exalg::ExalgError::WrongDegree {
            expected: 1,
            got: alpha.max_degree(),
        }));
    }
    let split = pq_split(alpha).map_err(CliffordError::Algebra)?;
    let a01 = split.component(0, 1);
    let a10_bar = split.component(1, 0).conj();
    let sqrt2 = ExactScalar::sqrt2();
    let wedge = a01.wedge(xi).map_err(CliffordError::Algebra)?;
    let contracted = if a10_bar.is_zero() {
        MultiVector::zero(xi.dim())
    } else {
        MultiVector::contract(&a10_bar, xi).map_err(CliffordError::Algebra)?
    };
    Ok((wedge - contracted).scale(&sqrt2))
}

/// Module bases in the fixed conventional order.
fn kaehler_basis(n: u8) -> Vec<BasisElement> {
    let be = |mask: Mask, sign: i8| BasisElement { zbar_mask: mask, sign, c2_slot: 0 };
    match n {
        3 => vec![
            // S+: 1, dzbar1^dzbar2, dzbar2^dzbar3, dzbar3^dzbar1
            be(0b000, 1),
            be(0b011, 1),
            be(0b110, 1),
            be(0b101, -1),
            // S-: dzbar1, dzbar2, dzbar3, dzbar1^dzbar2^dzbar3
            be(0b001, 1),
            be(0b010, 1),
            be(0b100, 1),
            be(0b111, 1),
        ],
        4 => {
            let mut v = Vec::new();
            v.push(be(0b0000, 1));
            for a in 0..4u8 {
                for b in (a + 1)..4 {
                    v.push(be((1 << a) | (1 << b), 1));
                }
            }
            v.push(be(0b1111, 1));
            for a in 0..4u8 {
                v.push(be(1 << a, 1));
            }
            for m in [0b0111u32, 0b1011, 0b1101, 0b1110] {
                v.push(be(m, 1));
            }
            v
        }
        _ => unreachable!("kaehler module only built for n = 3, 4"),
    }
}
