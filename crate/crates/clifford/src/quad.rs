//! Identification of the quadratic endomorphism as a differential form.
//!
//! Clifford multiplication restricts to isomorphisms onto the trace-free
//! Hermitian endomorphisms of the relevant block:
//!   6d S+:  i Lambda^2            (15 -> su(4))
//!   6d S-:  Lambda^4              (15 -> su(4))
//!   8d S+:  i Lambda^2 + Lambda^4_+  (63 -> su(8))
//!   5d:     i Lambda^2 + Lambda^4    (15 -> su(4))
//! `q_of_phi` inverts these maps exactly on `E_phi`.

use crate::matrix::ExactMat;
use crate::rep::{Chirality, FiberRep, SpinDim};
use crate::spinor::{energy_endo, CliffordOp, Spinor};
use crate::CliffordError;
use exalg::{ExactScalar, Mask, MultiVector};
use std::sync::OnceLock;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum QuadCase {
    SixPlus,
    SixMinus,
    Eight,
    Five,
}

impl QuadCase {
    pub fn of(dim: SpinDim, chirality: Chirality) -> Result<QuadCase, CliffordError> {
        match (dim, chirality) {
            (SpinDim::Six, Chirality::Plus) => Ok(QuadCase::SixPlus),
            (SpinDim::Six, Chirality::Minus) => Ok(QuadCase::SixMinus),
            (SpinDim::Eight, Chirality::Plus) => Ok(QuadCase::Eight),
            (SpinDim::Five, Chirality::Full) => Ok(QuadCase::Five),
            _ => Err(CliffordError::UnsupportedBlock),
        }
    }

    pub fn dim(&self) -> SpinDim {
        match self {
            QuadCase::SixPlus | QuadCase::SixMinus => SpinDim::Six,
            QuadCase::Eight => SpinDim::Eight,
            QuadCase::Five => SpinDim::Five,
        }
    }

    pub fn chirality(&self) -> Chirality {
        match self {
            QuadCase::SixPlus => Chirality::Plus,
            QuadCase::SixMinus => Chirality::Minus,
            QuadCase::Eight => Chirality::Plus,
            QuadCase::Five => Chirality::Full,
        }
    }
}

/// The preimage of `E_phi` in the designated form space.
#[derive(Clone, Debug)]
pub struct QuadraticForm {
    pub case: QuadCase,
    pub form: MultiVector,
}

struct QuadSolver {
    basis: Vec<MultiVector>,
    /// Map matrix: rows = flattened block entries, cols = basis forms.
    map: ExactMat,
    pivot_rows: Vec<usize>,
    inverse: ExactMat,
    block_rank: usize,
}

fn all_masks_of_degree(dim: u8, k: u32) -> Vec<Mask> {
    (0..(1u32 << dim)).filter(|m| m.count_ones() == k).collect()
}

/// Basis of the designated form space for each case.
pub fn form_space_basis(case: QuadCase) -> Vec<MultiVector> {
    let i = ExactScalar::i();
    match case {
        QuadCase::SixPlus => all_masks_of_degree(6, 2)
            .into_iter()
            .map(|m| MultiVector::monomial(6, m, i.clone()))
            .collect(),
        QuadCase::SixMinus => all_masks_of_degree(6, 4)
            .into_iter()
            .map(|m| MultiVector::monomial(6, m, ExactScalar::one()))
            .collect(),
        QuadCase::Eight => {
            let mut v: Vec<MultiVector> = all_masks_of_degree(8, 2)
                .into_iter()
                .map(|m| MultiVector::monomial(8, m, i.clone()))
                .collect();
            // self-dual 4-forms: e_S + *(e_S), one per complementary pair
            for s in all_masks_of_degree(8, 4) {
                let comp = !s & 0xff;
                if s < comp {
                    let e = MultiVector::monomial(8, s, ExactScalar::one());
                    v.push(e.clone() + e.hodge_star());
                }
            }
            v
        }
        QuadCase::Five => {
            let mut v: Vec<MultiVector> = all_masks_of_degree(5, 2)
                .into_iter()
                .map(|m| MultiVector::monomial(5, m, i.clone()))
                .collect();
            for s in all_masks_of_degree(5, 4) {
                v.push(MultiVector::monomial(5, s, ExactScalar::one()));
            }
            v
        }
    }
}

fn block_matrix(case: QuadCase, form: &MultiVector) -> ExactMat {
    let rep = FiberRep::get(case.dim());
    let full = rep.clifford_matrix(form).expect("form lives on the fiber");
    match case.chirality() {
        Chirality::Plus => rep.even_block(&full),
        Chirality::Minus => rep.odd_block(&full),
        Chirality::Full => full,
    }
}

fn build_solver(case: QuadCase) -> QuadSolver {
    let basis = form_space_basis(case);
    let block_rank = match case {
        QuadCase::SixPlus | QuadCase::SixMinus | QuadCase::Five => 4,
        QuadCase::Eight => 8,
    };
    let nrows = block_rank * block_rank;
    let mut map = ExactMat::zeros(nrows, basis.len());
    for (j, b) in basis.iter().enumerate() {
        let m = block_matrix(case, b);
        for r in 0..block_rank {
            for c in 0..block_rank {
                map.set(r * block_rank + c, j, m.get(r, c).clone());
            }
        }
    }
    // pick an invertible square row subset by elimination
    let mut work = map.clone();
    let mut pivot_rows = Vec::new();
    let mut used = vec![false; nrows];
    for col in 0..work.cols() {
        let mut found = None;
        for r in 0..nrows {
            if !used[r] && !work.get(r, col).is_zero() {
                found = Some(r);
                break;
            }
        }
        let r = found.expect("quadratic-term map lost rank; representation bug");
        used[r] = true;
        pivot_rows.push(r);
        let inv = work.get(r, col).clone().inv();
        for j in 0..work.cols() {
            let v = work.get(r, j).clone() * inv.clone();
            work.set(r, j, v);
        }
        for rr in 0..nrows {
            if rr != r && !work.get(rr, col).is_zero() {
                let f = work.get(rr, col).clone();
                for j in 0..work.cols() {
                    let v = work.get(rr, j).clone() - f.clone() * work.get(r, j).clone();
                    work.set(rr, j, v);
                }
            }
        }
    }
    let mut square = ExactMat::zeros(basis.len(), basis.len());
    for (k, &r) in pivot_rows.iter().enumerate() {
        for j in 0..basis.len() {
            square.set(k, j, map.get(r, j).clone());
        }
    }
    let inverse = square.inverse();
    QuadSolver {
        basis,
        map,
        pivot_rows,
        inverse,
        block_rank,
    }
}

fn solver(case: QuadCase) -> &'static QuadSolver {
    static SIX_PLUS: OnceLock<QuadSolver> = OnceLock::new();
    static SIX_MINUS: OnceLock<QuadSolver> = OnceLock::new();
    static EIGHT: OnceLock<QuadSolver> = OnceLock::new();
    static FIVE: OnceLock<QuadSolver> = OnceLock::new();
    match case {
        QuadCase::SixPlus => SIX_PLUS.get_or_init(|| build_solver(case)),
        QuadCase::SixMinus => SIX_MINUS.get_or_init(|| build_solver(case)),
        QuadCase::Eight => EIGHT.get_or_init(|| build_solver(case)),
        QuadCase::Five => FIVE.get_or_init(|| build_solver(case)),
    }
}

/// Exact rank of the Clifford identification map for a case.
pub fn identification_rank(case: QuadCase) -> usize {
    solver(case).map.rank()
}

/// Solve `c(form) = op` exactly in the designated form space.
pub fn clifford_preimage(case: QuadCase, op: &CliffordOp) -> Result<QuadraticForm, CliffordError> {
    let s = solver(case);
    let n = s.block_rank;
    assert_eq!(op.matrix.rows(), n);
    let mut rhs_full = vec![ExactScalar::zero(); n * n];
    for r in 0..n {
        for c in 0..n {
            rhs_full[r * n + c] = op.matrix.get(r, c).clone();
        }
    }
    let rhs: Vec<ExactScalar> = s.pivot_rows.iter().map(|&r| rhs_full[r].clone()).collect();
    let x = s.inverse.apply(&rhs);
    // verify against every row, not just the pivots
    let check = s.map.apply(&x);
    if check != rhs_full {
        return Err(CliffordError::PreimageInconsistent);
    }
    let mut form = MultiVector::zero(case.dim().fiber_dim());
    for (c, b) in x.iter().zip(&s.basis) {
        form = form + b.scale(c);
    }
    Ok(QuadraticForm { case, form })
}

/// `q(phi)`: the differential form corresponding to `E_phi`.
pub fn q_of_phi(phi: &Spinor) -> Result<QuadraticForm, CliffordError> {
    let case = QuadCase::of(phi.dim, phi.chirality)?;
    clifford_preimage(case, &energy_endo(phi))
}
