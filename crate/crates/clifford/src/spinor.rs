//! Spinor fiber values and the quadratic endomorphism.

use crate::matrix::ExactMat;
use crate::rep::{Chirality, FiberRep, SpinDim};
use crate::CliffordError;
use exalg::{ExactScalar, MultiVector};

/// A spinor fiber value in the fixed monomial basis of its `(dim, chirality)`
/// block. Ranks: 6d -> 4, 8d -> 8, 5d -> 4.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Spinor {
    pub dim: SpinDim,
    pub chirality: Chirality,
    pub coeffs: Vec<ExactScalar>,
}

impl Spinor {
    pub fn zero(dim: SpinDim, chirality: Chirality) -> Self {
        let rank = block_rank(dim, chirality);
        Spinor {
            dim,
            chirality,
            coeffs: vec![ExactScalar::zero(); rank],
        }
    }

    pub fn new(dim: SpinDim, chirality: Chirality, coeffs: Vec<ExactScalar>) -> Self {
        assert_eq!(coeffs.len(), block_rank(dim, chirality), "spinor rank mismatch");
        Spinor { dim, chirality, coeffs }
    }

    pub fn basis_vector(dim: SpinDim, chirality: Chirality, idx: usize) -> Self {
        let mut s = Spinor::zero(dim, chirality);
        s.coeffs[idx] = ExactScalar::one();
        s
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Spinor {
            dim: self.dim,
            chirality: self.chirality,
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Spinor) -> Self {
        assert_eq!((self.dim, self.chirality), (other.dim, other.chirality));
        Spinor {
            dim: self.dim,
            chirality: self.chirality,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    /// Hermitian squared norm with the induced fiber metric (`|dzbar_S|^2 = 2^|S|`).
    pub fn norm_sq(&self) -> ExactScalar {
        let w = block_weights(self.dim, self.chirality);
        let mut acc = ExactScalar::zero();
        for (c, wk) in self.coeffs.iter().zip(w) {
            acc += c.clone() * c.conj() * ExactScalar::from_int(*wk);
        }
        acc
    }

    /// Hermitian pairing `<self, other>`, conjugate-linear in `other`.
    pub fn inner(&self, other: &Spinor) -> ExactScalar {
        assert_eq!((self.dim, self.chirality), (other.dim, other.chirality));
        let w = block_weights(self.dim, self.chirality);
        let mut acc = ExactScalar::zero();
        for ((a, b), wk) in self.coeffs.iter().zip(&other.coeffs).zip(w) {
            acc += a.clone() * b.conj() * ExactScalar::from_int(*wk);
        }
        acc
    }

    /// The underlying anti-holomorphic form (6d/8d).
    pub fn as_form(&self) -> Result<MultiVector, CliffordError> {
        let rep = FiberRep::get(self.dim);
        if self.dim == SpinDim::Five {
            return Err(CliffordError::NotAntiHolomorphic);
        }
        let offset = match self.chirality {
            Chirality::Plus => 0,
            Chirality::Minus => rep.even_rank,
            Chirality::Full => return Err(CliffordError::NotAntiHolomorphic),
        };
        let n = self.dim.complex_dim().unwrap();
        let mut acc = MultiVector::zero(2 * n);
        for (k, c) in self.coeffs.iter().enumerate() {
            acc = acc + rep.basis_multivector(offset + k).scale(c);
        }
        Ok(acc)
    }

    /// Build a 6d/8d spinor from an anti-holomorphic form of pure parity.
    pub fn from_form(dim: SpinDim, form: &MultiVector) -> Result<Spinor, CliffordError> {
        let rep = FiberRep::get(dim);
        let coeffs = rep.form_to_coeffs(form)?;
        let even = coeffs[..rep.even_rank].iter().any(|c| !c.is_zero());
        let odd = coeffs[rep.even_rank..].iter().any(|c| !c.is_zero());
        match (even, odd) {
            (true, true) => Err(CliffordError::MixedChirality),
            (_, false) => Ok(Spinor::new(dim, Chirality::Plus, coeffs[..rep.even_rank].to_vec())),
            (false, true) => Ok(Spinor::new(
                dim,
                Chirality::Minus,
                coeffs[rep.even_rank..].to_vec(),
            )),
        }
    }

    /// 5d spinor from its two `C^2`-slot component forms on the complex factor.
    pub fn from_sigma_components(
        e1: &MultiVector,
        e2: &MultiVector,
    ) -> Result<Spinor, CliffordError> {
        let extract = |m: &MultiVector| -> Result<(ExactScalar, ExactScalar), CliffordError> {
            let comps = m.to_complex_basis().map_err(CliffordError::Algebra)?;
            let mut s0 = ExactScalar::zero();
            let mut s1 = ExactScalar::zero();
            for ((p, q), c) in comps {
                match (p, q) {
                    (0, 0) => s0 = c,
                    (0, 1) => s1 = c,
                    _ => return Err(CliffordError::NotAntiHolomorphic),
                }
            }
            Ok((s0, s1))
        };
        let (a, c) = extract(e1)?;
        let (b, d) = extract(e2)?;
        Ok(Spinor::new(SpinDim::Five, Chirality::Full, vec![a, b, c, d]))
    }

    /// The two component forms of a 5d spinor.
    pub fn sigma_components(&self) -> (MultiVector, MultiVector) {
        assert_eq!(self.dim, SpinDim::Five);
        let zb = MultiVector::dzbar(1, 1);
        let e1 = MultiVector::scalar(2, self.coeffs[0].clone()) + zb.scale(&self.coeffs[2]);
        let e2 = MultiVector::scalar(2, self.coeffs[1].clone()) + zb.scale(&self.coeffs[3]);
        (e1, e2)
    }
}

fn block_rank(dim: SpinDim, chirality: Chirality) -> usize {
    let rep = FiberRep::get(dim);
    match chirality {
        Chirality::Plus => rep.even_rank,
        Chirality::Minus => rep.rank - rep.even_rank,
        Chirality::Full => rep.rank,
    }
}

pub(crate) fn block_weights(dim: SpinDim, chirality: Chirality) -> &'static [i64] {
    let rep = FiberRep::get(dim);
    match chirality {
        Chirality::Plus => rep.weights_even(),
        Chirality::Minus => rep.weights_odd(),
        Chirality::Full => &rep.weights,
    }
}

/// An exact endomorphism of one spinor block.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliffordOp {
    pub dim: SpinDim,
    pub chirality: Chirality,
    pub matrix: ExactMat,
}

impl CliffordOp {
    pub fn apply(&self, s: &Spinor) -> Spinor {
        assert_eq!((s.dim, s.chirality), (self.dim, self.chirality));
        Spinor::new(self.dim, self.chirality, self.matrix.apply(&s.coeffs))
    }
}

/// Clifford action of a degree-1 form on a spinor; swaps chirality in 6d/8d.
pub fn clifford_1form(alpha: &MultiVector, s: &Spinor) -> Result<Spinor, CliffordError> {
    if alpha.degree() != Ok(1) || alpha.is_zero() {
        return Err(CliffordError::Algebra(exalg::ExalgError::WrongDegree {
            expected: 1,
            got: alpha.max_degree(),
        }));
    }
    clifford_form(alpha, s)
}

/// Clifford action of an arbitrary form: monomials act by composition of the
/// generator actions, extended linearly.
pub fn clifford_form(form: &MultiVector, s: &Spinor) -> Result<Spinor, CliffordError> {
    let rep = FiberRep::get(s.dim);
    let mat = rep.clifford_matrix(form)?;
    match s.chirality {
        Chirality::Full => Ok(Spinor::new(s.dim, Chirality::Full, mat.apply(&s.coeffs))),
        Chirality::Plus | Chirality::Minus => {
            let mut full = vec![ExactScalar::zero(); rep.rank];
            let offset = if s.chirality == Chirality::Plus { 0 } else { rep.even_rank };
            for (k, c) in s.coeffs.iter().enumerate() {
                full[offset + k] = c.clone();
            }
            let image = mat.apply(&full);
            let even_nz = image[..rep.even_rank].iter().any(|c| !c.is_zero());
            let odd_nz = image[rep.even_rank..].iter().any(|c| !c.is_zero());
            match (even_nz, odd_nz) {
                (true, true) => Err(CliffordError::MixedChirality),
                (_, false) => Ok(Spinor::new(
                    s.dim,
                    Chirality::Plus,
                    image[..rep.even_rank].to_vec(),
                )),
                (false, true) => Ok(Spinor::new(
                    s.dim,
                    Chirality::Minus,
                    image[rep.even_rank..].to_vec(),
                )),
            }
        }
    }
}

/// The trace-free Hermitian endomorphism
/// `E_phi(psi) = <psi, phi> phi - (1/r) |phi|^2 psi`.
pub fn energy_endo(phi: &Spinor) -> CliffordOp {
    let r = phi.rank() as i64;
    let w = block_weights(phi.dim, phi.chirality);
    let norm = phi.norm_sq();
    let shift = norm * ExactScalar::ratio(1, r);
    let mut m = ExactMat::zeros(phi.rank(), phi.rank());
    for i in 0..phi.rank() {
        for j in 0..phi.rank() {
            let mut v = phi.coeffs[i].clone() * phi.coeffs[j].conj() * ExactScalar::from_int(w[j]);
            if i == j {
                v -= shift.clone();
            }
            m.set(i, j, v);
        }
    }
    CliffordOp {
        dim: phi.dim,
        chirality: phi.chirality,
        matrix: m,
    }
}
