//! Numbers of the form `c * sqrt(r)` with `c` a Gaussian rational and `r` a
//! positive integer. Closed under multiplication and inversion, which is all
//! the positive-branch square roots in the Haar reformulation require.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Surd {
    coeff: Scalar,
    radicand: BigInt,
}

const SMALL_PRIMES: [u32; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

impl Surd {
    pub fn from_scalar(c: Scalar) -> Self {
        Surd { coeff: c, radicand: BigInt::one() }
    }

    /// `c * sqrt(r)`; `None` unless `r > 0`.
    pub fn new(c: Scalar, r: &BigRational) -> Option<Self> {
        if !r.is_positive() {
            return None;
        }
        // sqrt(p/q) = sqrt(p q) / q
        let den = r.denom().clone();
        let coeff = c.scale(&BigRational::new(BigInt::one(), den.clone()));
        Some(Surd { coeff, radicand: r.numer() * den }.normalized())
    }

    /// Positive square root of a positive rational.
    pub fn sqrt(r: &BigRational) -> Option<Self> {
        Surd::new(Scalar::one(), r)
    }

    fn normalized(mut self) -> Self {
        if self.coeff.is_zero() {
            self.radicand = BigInt::one();
            return self;
        }
        let mut outside = BigInt::one();
        for p in SMALL_PRIMES {
            let sq = BigInt::from(p * p);
            while (&self.radicand % &sq).is_zero() {
                self.radicand /= &sq;
                outside *= p;
            }
        }
        let root = self.radicand.sqrt();
        if &root * &root == self.radicand {
            outside *= root;
            self.radicand = BigInt::one();
        }
        if !outside.is_one() {
            self.coeff = self.coeff.scale(&BigRational::from_integer(outside));
        }
        self
    }

    pub fn coeff(&self) -> &Scalar {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, other: &Surd) -> Surd {
        Surd { coeff: &self.coeff * &other.coeff, radicand: &self.radicand * &other.radicand }.normalized()
    }

    pub fn inv(&self) -> Option<Surd> {
        // 1/(c sqrt r) = sqrt(r) / (c r)
        let r = BigRational::from_integer(self.radicand.clone());
        let c = self.coeff.scale(&r).recip()?;
        Some(Surd { coeff: c, radicand: self.radicand.clone() })
    }

    pub fn powi(&self, exp: i64) -> Option<Surd> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Surd::from_scalar(Scalar::one());
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }

    pub fn square(&self) -> Scalar {
        (&self.coeff * &self.coeff).scale(&BigRational::from_integer(self.radicand.clone()))
    }

    /// Exact value when the radicand is a perfect square.
    pub fn try_to_scalar(&self) -> Option<Scalar> {
        self.radicand.is_one().then(|| self.coeff.clone()).or_else(|| self.is_zero().then(Scalar::zero))
    }

    pub fn to_f64_complex(&self) -> num_complex::Complex64 {
        use crate::field::Field;
        let s = num_complex::Complex64::from_scalar(&self.coeff);
        let r: f64 = num_traits::ToPrimitive::to_f64(&self.radicand).unwrap_or(f64::NAN);
        s * r.sqrt()
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Surd) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        // c1 sqrt r1 = c2 sqrt r2 iff c1/c2 is a positive real and |c1|^2 r1 = |c2|^2 r2
        let ratio = &self.coeff * &other.coeff.conj();
        let r1 = BigRational::from_integer(self.radicand.clone());
        let r2 = BigRational::from_integer(other.radicand.clone());
        ratio.is_real()
            && ratio.re().is_positive()
            && self.coeff.norm_sqr() * r1 == other.coeff.norm_sqr() * r2
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_one() {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "({})*sqrt({})", self.coeff, self.radicand)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sqrt_of_square_is_rational() {
        let s = Surd::sqrt(&q(9, 4)).unwrap();
        assert_eq!(s.try_to_scalar(), Some(Scalar::from_ratio(3, 2)));
        let t = Surd::sqrt(&q(4, 3)).unwrap();
        assert!(t.try_to_scalar().is_none());
        assert_eq!(t.square(), Scalar::from_ratio(4, 3));
        assert!(Surd::sqrt(&q(-1, 2)).is_none());
    }

    #[test]
    fn products_fold_radicands() {
        let a = Surd::sqrt(&q(2, 1)).unwrap();
        let b = Surd::sqrt(&q(8, 1)).unwrap();
        assert_eq!(a.mul(&b).try_to_scalar(), Some(Scalar::from_int(4)));
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv).try_to_scalar(), Some(Scalar::one()));
        assert_eq!(a.powi(-2).unwrap().try_to_scalar(), Some(Scalar::from_ratio(1, 2)));
    }

    #[test]
    fn equality_respects_sign_and_magnitude() {
        let a = Surd::new(Scalar::from_int(2), &q(3, 1)).unwrap();
        let b = Surd::sqrt(&q(12, 1)).unwrap();
        assert_eq!(a, b);
        let c = Surd::new(Scalar::from_int(-2), &q(3, 1)).unwrap();
        assert_ne!(a, c);
        assert_ne!(a, Surd::new(Scalar::i(), &q(12, 1)).unwrap());
    }
}
