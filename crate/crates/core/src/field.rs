//! The arithmetic interface shared by every coefficient type.
//!
//! Matrix code, the forward map and the inverse algorithm are written once
//! against [`Field`] and then run over exact scalars, dual numbers (for
//! Jacobians), truncated Laurent series (for limits along lines) or `f64` complex
//! numbers (for cheap numeric cross-checks).

use std::fmt::Debug;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::scalar::Scalar;

pub trait Field: Clone + Debug + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_scalar(s: &Scalar) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for non-units.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|r| self.mul(&r))
    }

    /// Integer power; negative exponents invert.
    fn powi(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Some(acc)
    }

    /// Equality used by reconstruction checks. Exact types use `==`.
    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn from_i64(n: i64) -> Self {
        Scalar::from_int(n)
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
}

const APPROX_TOL: f64 = 1e-9;

impl Field for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn from_scalar(s: &Scalar) -> Self {
        Complex64::new(
            s.re().to_f64().unwrap_or(f64::NAN),
            s.im().to_f64().unwrap_or(f64::NAN),
        )
    }
    fn is_zero(&self) -> bool {
        self.norm() == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if self.norm() == 0.0 {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
    fn approx_eq(&self, other: &Self) -> bool {
        (self - other).norm() <= APPROX_TOL * (1.0 + self.norm().max(other.norm()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powi_handles_negative_exponents() {
        let two = Scalar::from_int(2);
        assert_eq!(two.powi(3).unwrap(), Scalar::from_int(8));
        assert_eq!(two.powi(-2).unwrap(), Scalar::from_ratio(1, 4));
        assert_eq!(two.powi(0).unwrap(), Scalar::one());
        assert!(Scalar::zero().powi(-1).is_none());
    }

    #[test]
    fn complex_companion_tracks_exact_values() {
        let s: Scalar = "1/2-3/4*i".parse().unwrap();
        let c = Complex64::from_scalar(&s);
        assert!(c.approx_eq(&Complex64::new(0.5, -0.75)));
        let p = Field::mul(&c, &Field::inv(&c).unwrap());
        assert!(p.approx_eq(&Complex64::one()));
    }
}
