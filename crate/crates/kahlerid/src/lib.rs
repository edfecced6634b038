//! Exact verification of the Kaehler Hodge-star identities for `ddbar h`,
//! parameterised by an arbitrary Hessian matrix `H_jk = d^2 h / dz_j dzbar_k`
//! at a point where the metric is standard. The identities are linear in the
//! Hessian, so a sweep over matrix units is complete; random rational
//! Hessians are checked on top.
//!
//! With the positive-spectrum Laplacian `Delta = -sum(d^2/dx^2 + d^2/dy^2)`
//! the trace relation reads `Delta h = -4 tr H`.

use exalg::{ExactScalar, GaussQ, MultiVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, thiserror::Error)]
pub enum KahlerIdError {
    #[error("Hessian dimension must be 3 or 4, got {0}")]
    BadDimension(usize),
    #[error("identity failed: {0}")]
    IdentityFailed(String),
}

/// Hessian data `H_jk = d^2 h / dz_j dzbar_k` with Gaussian-rational entries.
#[derive(Clone, Debug)]
pub struct HessianData {
    pub n: usize,
    pub entries: Vec<Vec<GaussQ>>,
}

impl HessianData {
    pub fn new(n: usize, entries: Vec<Vec<GaussQ>>) -> Result<Self, KahlerIdError> {
        if n != 3 && n != 4 {
            return Err(KahlerIdError::BadDimension(n));
        }
        assert_eq!(entries.len(), n);
        for row in &entries {
            assert_eq!(row.len(), n);
        }
        Ok(HessianData { n, entries })
    }

    pub fn zero(n: usize) -> Result<Self, KahlerIdError> {
        HessianData::new(n, vec![vec![GaussQ::zero(); n]; n])
    }

    pub fn identity(n: usize) -> Result<Self, KahlerIdError> {
        let mut h = HessianData::zero(n)?;
        for k in 0..n {
            h.entries[k][k] = GaussQ::one();
        }
        Ok(h)
    }

    /// Matrix unit `E_{jk}` (0-based indices).
    pub fn unit(n: usize, j: usize, k: usize) -> Result<Self, KahlerIdError> {
        let mut h = HessianData::zero(n)?;
        h.entries[j][k] = GaussQ::one();
        Ok(h)
    }

    pub fn random(rng: &mut ChaCha8Rng, n: usize) -> Result<Self, KahlerIdError> {
        let mut h = HessianData::zero(n)?;
        for j in 0..n {
            for k in 0..n {
                let re = GaussQ::ratio(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4));
                let im = GaussQ::ratio(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4))
                    * GaussQ::i();
                h.entries[j][k] = re + im;
            }
        }
        Ok(h)
    }

    /// `-4 tr H`, the Laplacian of `h` in the positive-spectrum convention.
    pub fn laplacian(&self) -> ExactScalar {
        let mut tr = GaussQ::zero();
        for k in 0..self.n {
            tr = tr + self.entries[k][k].clone();
        }
        ExactScalar::from_gauss(tr) * ExactScalar::from_int(-4)
    }
}

/// The (1,1)-form `sum_jk H_jk dz_j ^ dzbar_k`.
pub fn ddbar_form(h: &HessianData) -> MultiVector {
    let n = h.n as u8;
    let mut acc = MultiVector::zero(2 * n);
    for j in 0..h.n {
        for k in 0..h.n {
            if h.entries[j][k].is_zero() {
                continue;
            }
            let mono = MultiVector::dz(n, j as u8 + 1)
                .wedge(&MultiVector::dzbar(n, k as u8 + 1))
                .unwrap();
            acc = acc + mono.scale(&ExactScalar::from_gauss(h.entries[j][k].clone()));
        }
    }
    acc
}

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    pub items: Vec<IdentityCheck>,
}

impl IdentityReport {
    fn push(&mut self, name: impl Into<String>, pass: bool) {
        self.items.push(IdentityCheck { name: name.into(), pass });
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.items.iter().find(|c| !c.pass).map(|c| c.name.as_str())
    }

    pub fn ensure(self) -> Result<IdentityReport, KahlerIdError> {
        match self.first_failure() {
            None => Ok(self),
            Some(name) => Err(KahlerIdError::IdentityFailed(name.to_string())),
        }
    }
}

/// Check the star identities for one Hessian. For n = 3:
///   *(ddbar h ^ omega) = -ddbar h + (i/2) Delta(h) omega
///   <ddbar h, omega>   = (i/2) Delta(h)
/// For n = 4:
///   *(ddbar h ^ omega)   = -ddbar h ^ omega + (i/4) Delta(h) omega^2
///   *(ddbar h ^ omega^2) = -2 ddbar h + i Delta(h) omega
///   <ddbar h, omega>     = (i/2) Delta(h)
pub fn check_star_identities(h: &HessianData) -> IdentityReport {
    let n = h.n as u8;
    let mut report = IdentityReport::default();
    let form = ddbar_form(h);
    let omega = MultiVector::omega(n);
    let i = ExactScalar::i();
    let lap = h.laplacian();

    if h.n == 3 {
        let lhs = form.wedge(&omega).unwrap().hodge_star();
        let rhs = -form.clone() + omega.scale(&(i.clone() * ExactScalar::ratio(1, 2) * lap.clone()));
        report.push("*(ddbar h ^ omega) = -ddbar h + (i/2) Delta(h) omega", lhs == rhs);
    } else {
        let lhs = form.wedge(&omega).unwrap().hodge_star();
        let om2 = omega.wedge(&omega).unwrap();
        let rhs = -form.wedge(&omega).unwrap()
            + om2.scale(&(i.clone() * ExactScalar::ratio(1, 4) * lap.clone()));
        report.push(
            "*(ddbar h ^ omega) = -(ddbar h ^ omega) + (i/4) Delta(h) omega^2",
            lhs == rhs,
        );
        let lhs = form.wedge(&om2).unwrap().hodge_star();
        let rhs = form.scale(&ExactScalar::from_int(-2)) + omega.scale(&(i.clone() * lap.clone()));
        report.push("*(ddbar h ^ omega^2) = -2 ddbar h + i Delta(h) omega", lhs == rhs);
    }

    // pointwise pairing, two ways: *(xi ^ *conj(omega)) and the coefficient sum
    let via_star = form
        .wedge(&omega.conj().hodge_star())
        .unwrap()
        .hodge_star()
        .coeff(0);
    let via_coeffs = form.hermitian_inner(&omega).unwrap();
    let expected = i * ExactScalar::ratio(1, 2) * lap;
    report.push("<ddbar h, omega> = (i/2) Delta(h)", via_star == expected);
    report.push("pairing via *(xi ^ *omega) equals the coefficient pairing", via_star == via_coeffs);
    report
}

/// Full verification: the matrix-unit basis (complete by linearity) plus a
/// seeded random sweep.
pub fn verify_kahler_suite(n: usize, trials: usize, seed: u64) -> Result<IdentityReport, KahlerIdError> {
    if n != 3 && n != 4 {
        return Err(KahlerIdError::BadDimension(n));
    }
    let mut report = IdentityReport::default();
    for j in 0..n {
        for k in 0..n {
            let h = HessianData::unit(n, j, k)?;
            let sub = check_star_identities(&h);
            report.push(
                format!("matrix unit E_{}{} (n = {})", j + 1, k + 1, n),
                sub.all_pass(),
            );
        }
    }
    let h0 = HessianData::zero(n)?;
    report.push(format!("zero Hessian (n = {})", n), check_star_identities(&h0).all_pass());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let h = HessianData::random(&mut rng, n)?;
        let sub = check_star_identities(&h);
        report.push(format!("random Hessian #{} (n = {})", t, n), sub.all_pass());
    }
    report.ensure()
}
