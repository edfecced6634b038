//! Exact coefficient field Q(i, sqrt(2)).
//!
//! Every pointwise identity in this workspace is checked with zero tolerance,
//! so coefficients are kept in the smallest field containing the rationals,
//! `i`, and the `sqrt(2)` factors of the Clifford action of one-forms.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// A Gaussian rational `re + im*i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussQ {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussQ {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussQ { re, im }
    }

    pub fn zero() -> Self {
        GaussQ::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussQ::new(BigRational::one(), BigRational::zero())
    }

    pub fn i() -> Self {
        GaussQ::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussQ::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den` as a real rational.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GaussQ::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussQ::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus `re^2 + im^2`, a nonnegative rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero GaussQ");
        GaussQ::new(&self.re / &n, -&self.im / &n)
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    // `to_f64` on Ratio<BigInt> handles overflow by scaling; good enough here
    // because all exact values in this crate stay small.
    num::ToPrimitive::to_f64(r).expect("rational out of f64 range")
}

impl Add for GaussQ {
    type Output = GaussQ;
    fn add(self, rhs: GaussQ) -> GaussQ {
        GaussQ::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussQ {
    type Output = GaussQ;
    fn sub(self, rhs: GaussQ) -> GaussQ {
        GaussQ::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for GaussQ {
    type Output = GaussQ;
    fn neg(self) -> GaussQ {
        GaussQ::new(-self.re, -self.im)
    }
}

impl Mul for GaussQ {
    type Output = GaussQ;
    fn mul(self, rhs: GaussQ) -> GaussQ {
        GaussQ::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl fmt::Debug for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else {
            write!(f, "({}+{}i)", self.re, self.im)
        }
    }
}

/// An element of Q(i, sqrt(2)): `rational + sqrt2 * sqrt(2)`.
///
/// The representation is unique because sqrt(2) is irrational over Q(i), so
/// `==` is exact equality in the field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    pub rational: GaussQ,
    pub sqrt2: GaussQ,
}

impl ExactScalar {
    pub fn new(rational: GaussQ, sqrt2: GaussQ) -> Self {
        ExactScalar { rational, sqrt2 }
    }

    pub fn zero() -> Self {
        ExactScalar::new(GaussQ::zero(), GaussQ::zero())
    }

    pub fn one() -> Self {
        ExactScalar::new(GaussQ::one(), GaussQ::zero())
    }

    pub fn i() -> Self {
        ExactScalar::new(GaussQ::i(), GaussQ::zero())
    }

    pub fn sqrt2() -> Self {
        ExactScalar::new(GaussQ::zero(), GaussQ::one())
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar::new(GaussQ::from_int(n), GaussQ::zero())
    }

    /// `num/den` as a real rational scalar.
    pub fn ratio(num: i64, den: i64) -> Self {
        ExactScalar::new(GaussQ::ratio(num, den), GaussQ::zero())
    }

    /// `(num/den) * i`.
    pub fn ratio_i(num: i64, den: i64) -> Self {
        ExactScalar::new(GaussQ::ratio(num, den) * GaussQ::i(), GaussQ::zero())
    }

    pub fn from_gauss(g: GaussQ) -> Self {
        ExactScalar::new(g, GaussQ::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.sqrt2.is_zero()
    }

    /// Complex conjugation; sqrt(2) is real so both parts conjugate.
    pub fn conj(&self) -> Self {
        ExactScalar::new(self.rational.conj(), self.sqrt2.conj())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero ExactScalar");
        // (a + b s)^-1 = (a - b s) / (a^2 - 2 b^2), s = sqrt(2).
        // a^2 = 2 b^2 in Q(i) forces a = b = 0, so the denominator is nonzero.
        let den = self.rational.clone() * self.rational.clone()
            - GaussQ::from_int(2) * self.sqrt2.clone() * self.sqrt2.clone();
        let den_inv = den.inv();
        ExactScalar::new(
            self.rational.clone() * den_inv.clone(),
            -self.sqrt2.clone() * den_inv,
        )
    }

    pub fn to_complex(&self) -> Complex64 {
        self.rational.to_complex() + self.sqrt2.to_complex() * std::f64::consts::SQRT_2
    }

    /// True when the value is fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.rational.im.is_zero() && self.sqrt2.im.is_zero()
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: ExactScalar) -> ExactScalar {
        ExactScalar::new(self.rational + rhs.rational, self.sqrt2 + rhs.sqrt2)
    }
}

impl AddAssign for ExactScalar {
    fn add_assign(&mut self, rhs: ExactScalar) {
        let lhs = std::mem::replace(self, ExactScalar::zero());
        *self = lhs + rhs;
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        ExactScalar::new(self.rational - rhs.rational, self.sqrt2 - rhs.sqrt2)
    }
}

impl SubAssign for ExactScalar {
    fn sub_assign(&mut self, rhs: ExactScalar) {
        let lhs = std::mem::replace(self, ExactScalar::zero());
        *self = lhs - rhs;
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-self.rational, -self.sqrt2)
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 2 b1 b2 + (a1 b2 + b1 a2) s
        ExactScalar::new(
            self.rational.clone() * rhs.rational.clone()
                + GaussQ::from_int(2) * self.sqrt2.clone() * rhs.sqrt2.clone(),
            self.rational * rhs.sqrt2 + self.sqrt2 * rhs.rational,
        )
    }
}

impl MulAssign for ExactScalar {
    fn mul_assign(&mut self, rhs: ExactScalar) {
        let lhs = std::mem::replace(self, ExactScalar::zero());
        *self = lhs * rhs;
    }
}

impl Div for ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: ExactScalar) -> ExactScalar {
        self * rhs.inv()
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.sqrt2.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{:?}", self.rational),
            (true, false) => write!(f, "{:?}*sqrt2", self.sqrt2),
            (false, false) => write!(f, "{:?}+{:?}*sqrt2", self.rational, self.sqrt2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops_round_trip() {
        let x = ExactScalar::new(GaussQ::ratio(3, 4) * GaussQ::i(), GaussQ::ratio(-2, 5));
        let y = ExactScalar::new(GaussQ::ratio(1, 3), GaussQ::i());
        let z = x.clone() * y.clone();
        assert_eq!(z / y, x);
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let s = ExactScalar::sqrt2();
        assert_eq!(s.clone() * s, ExactScalar::from_int(2));
    }

    #[test]
    fn inverse_of_mixed_element() {
        // (1 + sqrt2)^-1 = sqrt2 - 1
        let x = ExactScalar::one() + ExactScalar::sqrt2();
        let expected = ExactScalar::sqrt2() - ExactScalar::one();
        assert_eq!(x.inv(), expected);
    }

    #[test]
    fn conjugation_fixes_real_values() {
        let x = ExactScalar::ratio(7, 2) + ExactScalar::sqrt2();
        assert_eq!(x.conj(), x);
        assert!(x.is_real());
        let y = ExactScalar::ratio_i(1, 2);
        assert_eq!(y.conj(), -y);
    }
}
