//! Type, duality and Lefschetz decompositions.

use crate::multivector::{Mask, MultiVector};
use crate::scalar::ExactScalar;
use crate::ExalgError;
use std::collections::BTreeMap;

/// Splitting of a complexified form into pure `(p,q)` types.
#[derive(Clone, Debug)]
pub struct PQSplit {
    dim: u8,
    pub components: BTreeMap<(u8, u8), MultiVector>,
}

impl PQSplit {
    pub fn component(&self, p: u8, q: u8) -> MultiVector {
        self.components
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| MultiVector::zero(self.dim))
    }

    pub fn reassemble(&self) -> MultiVector {
        let mut acc = MultiVector::zero(self.dim);
        for c in self.components.values() {
            acc = acc + c.clone();
        }
        acc
    }
}

/// Split a form on a complex fiber into its `(p,q)` components.
pub fn pq_split(xi: &MultiVector) -> Result<PQSplit, ExalgError> {
    let n = xi.complex_dim()?;
    let complex = xi.to_complex_basis()?;
    let mut grouped: BTreeMap<(u8, u8), BTreeMap<(Mask, Mask), ExactScalar>> = BTreeMap::new();
    for ((p, q), c) in complex {
        grouped
            .entry((p.count_ones() as u8, q.count_ones() as u8))
            .or_default()
            .insert((p, q), c);
    }
    let components = grouped
        .into_iter()
        .map(|(pq, comps)| (pq, MultiVector::from_complex_basis(n, &comps)))
        .filter(|(_, m)| !m.is_zero())
        .collect();
    Ok(PQSplit { dim: 2 * n, components })
}

/// Split a middle-degree form into the +/- eigenspaces of the Hodge star.
/// Eigenvalues are `+-1` for even complex dimension and `+-i` for odd; the
/// first component always carries the `+1` resp. `+i` eigenvalue.
pub fn sd_asd_split(xi: &MultiVector) -> Result<(MultiVector, MultiVector), ExalgError> {
    let n = xi.complex_dim()?;
    if !xi.is_zero() && xi.degree() != Ok(n) {
        return Err(ExalgError::WrongDegree {
            expected: n,
            got: xi.max_degree(),
        });
    }
    let star = xi.hodge_star();
    let half = ExactScalar::ratio(1, 2);
    if n % 2 == 0 {
        // ** = +1: xi_[+-] = (xi +- *xi)/2
        let plus = (xi.clone() + star.clone()).scale(&half);
        let minus = (xi.clone() - star).scale(&half);
        Ok((plus, minus))
    } else {
        // ** = -1: *(xi - i *xi) = i (xi - i *xi)
        let i = ExactScalar::i();
        let plus = (xi.clone() - star.clone().scale(&i)).scale(&half);
        let minus = (xi.clone() + star.scale(&i)).scale(&half);
        Ok((plus, minus))
    }
}

/// Lefschetz-type decomposition of a 3-form on C^3:
/// `beta = beta30 + eta ^ omega + gamma + conjugate pieces`,
/// with `eta` of type (0,1), `gamma` primitive of type (1,2).
#[derive(Clone, Debug)]
pub struct Lefschetz3Split {
    pub beta30: MultiVector,
    pub eta01: MultiVector,
    pub gamma12: MultiVector,
    pub beta03: MultiVector,
    pub eta10: MultiVector,
    pub gamma21: MultiVector,
}

impl Lefschetz3Split {
    pub fn reassemble(&self) -> MultiVector {
        let omega = MultiVector::omega(3);
        self.beta30.clone()
            + self.eta01.wedge(&omega).unwrap()
            + self.gamma12.clone()
            + self.beta03.clone()
            + self.eta10.wedge(&omega).unwrap()
            + self.gamma21.clone()
    }
}

pub fn lefschetz_split_3form(
    beta: &MultiVector,
    require_real: bool,
) -> Result<Lefschetz3Split, ExalgError> {
    let n = beta.complex_dim()?;
    if n != 3 {
        return Err(ExalgError::NotComplexFiber(beta.dim()));
    }
    if !beta.is_zero() && beta.degree() != Ok(3) {
        return Err(ExalgError::WrongDegree {
            expected: 3,
            got: beta.max_degree(),
        });
    }
    if require_real && !beta.is_real() {
        return Err(ExalgError::NotReal);
    }
    let split = pq_split(beta)?;
    let omega = MultiVector::omega(3);
    let four = ExactScalar::from_int(4);

    // The (0,1) ^ omega summand is extracted by Hermitian projection: the
    // images dzbar_k ^ omega are mutually orthogonal with squared norm 4, and
    // the Lefschetz decomposition is orthogonal.
    let b12 = split.component(1, 2);
    let mut eta01 = MultiVector::zero(6);
    for k in 1..=3u8 {
        let dir = MultiVector::dzbar(3, k).wedge(&omega)?;
        let coeff = b12.hermitian_inner(&dir)? / four.clone();
        eta01 = eta01 + MultiVector::dzbar(3, k).scale(&coeff);
    }
    let gamma12 = b12 - eta01.wedge(&omega)?;
    debug_assert!(gamma12.wedge(&omega)?.is_zero());

    let b21 = split.component(2, 1);
    let mut eta10 = MultiVector::zero(6);
    for k in 1..=3u8 {
        let dir = MultiVector::dz(3, k).wedge(&omega)?;
        let coeff = b21.hermitian_inner(&dir)? / four.clone();
        eta10 = eta10 + MultiVector::dz(3, k).scale(&coeff);
    }
    let gamma21 = b21 - eta10.wedge(&omega)?;

    Ok(Lefschetz3Split {
        beta30: split.component(3, 0),
        eta01,
        gamma12,
        beta03: split.component(0, 3),
        eta10,
        gamma21,
    })
}
