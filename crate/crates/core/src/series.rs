//! Truncated Laurent series in one variable over any coefficient field.
//!
//! Used to run the inverse algorithm along a line `c + t v` when a direct
//! evaluation at `t = 0` hits a removable zero denominator. A series knows its
//! coefficients of `t^k` for `k < prec`; every operation tracks how much of
//! that survives, so a limit at `t = 0` is only reported when it is determined.

use crate::field::Field;
use crate::scalar::Scalar;

/// `t^val (c_0 + c_1 t + …) + O(t^prec)` with `c_0 ≠ 0`. Stored coefficients
/// stop at the last nonzero one. A series with no known nonzero coefficient
/// has `val == prec` and no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<C> {
    val: i64,
    prec: i64,
    coeffs: Vec<C>,
}

impl<C: Field> Series<C> {
    /// `a + b t`, known modulo `t^prec`.
    pub fn linear(a: C, b: C, prec: i64) -> Self {
        Series::from_coeffs(0, prec, vec![a, b])
    }

    pub fn constant(c: C, prec: i64) -> Self {
        Series::from_coeffs(0, prec, vec![c])
    }

    /// Coefficients of `t^start, t^{start+1}, …`; entries at or beyond `prec` are dropped.
    fn from_coeffs(start: i64, prec: i64, mut coeffs: Vec<C>) -> Self {
        coeffs.truncate((prec - start).max(0) as usize);
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Series { val: prec, prec, coeffs: Vec::new() },
            Some(z) => {
                coeffs.drain(..z);
                while coeffs.last().is_some_and(Field::is_zero) {
                    coeffs.pop();
                }
                Series { val: start + z as i64, prec, coeffs }
            }
        }
    }

    pub fn valuation(&self) -> i64 {
        self.val
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// Coefficient of `t^k`, `None` when `k` is beyond the known precision.
    pub fn coeff(&self, k: i64) -> Option<C> {
        if k >= self.prec {
            None
        } else if k < self.val {
            Some(C::zero())
        } else {
            Some(self.coeffs.get((k - self.val) as usize).cloned().unwrap_or_else(C::zero))
        }
    }

    /// Value at `t = 0`; `None` at a pole or when the constant term is not determined.
    pub fn at_zero(&self) -> Option<C> {
        if self.val < 0 {
            None
        } else {
            self.coeff(0)
        }
    }

    fn default_prec() -> i64 {
        i64::MAX / 4
    }
}

impl<C: Field> Field for Series<C> {
    // Constants are exact: their precision is effectively unbounded.
    fn zero() -> Self {
        let p = Series::<C>::default_prec();
        Series { val: p, prec: p, coeffs: Vec::new() }
    }
    fn one() -> Self {
        Series::from_i64(1)
    }
    fn from_i64(n: i64) -> Self {
        Series::from_scalar(&Scalar::from_int(n))
    }
    fn from_scalar(s: &Scalar) -> Self {
        let c = C::from_scalar(s);
        if c.is_zero() {
            return Series::zero();
        }
        Series { val: 0, prec: Series::<C>::default_prec(), coeffs: vec![c] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let start = self.val.min(other.val);
        if start >= prec {
            return Series { val: prec, prec, coeffs: Vec::new() };
        }
        let end = |s: &Series<C>| if s.coeffs.is_empty() { start } else { s.val + s.coeffs.len() as i64 };
        let len = (end(self).max(end(other)).min(prec) - start).max(0) as usize;
        let mut out = vec![C::zero(); len];
        for s in [self, other] {
            for (i, c) in s.coeffs.iter().enumerate() {
                let k = (s.val - start) as usize + i;
                if k < len {
                    out[k] = out[k].add(c);
                }
            }
        }
        Series::from_coeffs(start, prec, out)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let prec = self.prec.saturating_add(other.val).min(other.prec.saturating_add(self.val));
        let val = self.val.saturating_add(other.val);
        if self.is_zero() || other.is_zero() || val >= prec {
            return Series { val: prec, prec, coeffs: Vec::new() };
        }
        let len = ((prec - val) as usize).min(self.coeffs.len() + other.coeffs.len() - 1);
        let mut out = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Series::from_coeffs(val, prec, out)
    }
    fn neg(&self) -> Self {
        Series { val: self.val, prec: self.prec, coeffs: self.coeffs.iter().map(Field::neg).collect() }
    }
    fn inv(&self) -> Option<Self> {
        let lead = self.coeffs.first()?;
        let lead_inv = lead.inv()?;
        let val = -self.val;
        if self.coeffs.len() == 1 {
            let prec = val.saturating_add(self.prec - self.val);
            return Some(Series { val, prec, coeffs: vec![lead_inv] });
        }
        // relative precision carries over, capped for exact polynomials
        let len = (self.prec - self.val).min(MAX_TERMS) as usize;
        let mut out: Vec<C> = Vec::with_capacity(len);
        out.push(lead_inv.clone());
        for k in 1..len {
            let mut acc = C::zero();
            for i in 1..=k.min(self.coeffs.len() - 1) {
                acc = acc.add(&self.coeffs[i].mul(&out[k - i]));
            }
            out.push(acc.mul(&lead_inv).neg());
        }
        Some(Series::from_coeffs(val, val + len as i64, out))
    }
    fn approx_eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

const MAX_TERMS: i64 = 64;
