//! Forward-mode differentiation with several independent tangent directions.
//!
//! A value `v + Σ t_k ε_k` with `ε_j ε_k = 0`. Propagating one tangent per
//! input variable through a computation yields a full row of its Jacobian.

use crate::field::Field;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct MultiDual<F> {
    pub value: F,
    /// Empty means every tangent component is zero.
    pub tangent: Vec<F>,
}

impl<F: Field> MultiDual<F> {
    pub fn constant(value: F) -> Self {
        MultiDual { value, tangent: Vec::new() }
    }

    /// The coordinate function for input `index` out of `count` variables.
    pub fn variable(value: F, index: usize, count: usize) -> Self {
        let mut tangent = vec![F::zero(); count];
        tangent[index] = F::one();
        MultiDual { value, tangent }
    }

    pub fn derivative(&self, index: usize) -> F {
        self.tangent.get(index).cloned().unwrap_or_else(F::zero)
    }

    fn zip_tangent(&self, other: &Self, f: impl Fn(&F, &F) -> F) -> Vec<F> {
        let n = self.tangent.len().max(other.tangent.len());
        if n == 0 {
            return Vec::new();
        }
        let z = F::zero();
        (0..n)
            .map(|k| f(self.tangent.get(k).unwrap_or(&z), other.tangent.get(k).unwrap_or(&z)))
            .collect()
    }

    fn scaled_tangent(&self, c: &F) -> Vec<F> {
        self.tangent.iter().map(|t| t.mul(c)).collect()
    }
}

impl<F: Field> PartialEq for MultiDual<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.value != other.value {
            return false;
        }
        let n = self.tangent.len().max(other.tangent.len());
        (0..n).all(|k| self.derivative(k) == other.derivative(k))
    }
}

impl<F: Field> Field for MultiDual<F> {
    fn zero() -> Self {
        Self::constant(F::zero())
    }
    fn one() -> Self {
        Self::constant(F::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }
    fn from_scalar(s: &Scalar) -> Self {
        Self::constant(F::from_scalar(s))
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.tangent.iter().all(Field::is_zero)
    }
    fn add(&self, other: &Self) -> Self {
        MultiDual { value: self.value.add(&other.value), tangent: self.zip_tangent(other, |a, b| a.add(b)) }
    }
    fn sub(&self, other: &Self) -> Self {
        MultiDual { value: self.value.sub(&other.value), tangent: self.zip_tangent(other, |a, b| a.sub(b)) }
    }
    fn mul(&self, other: &Self) -> Self {
        let tangent = match (self.tangent.is_empty(), other.tangent.is_empty()) {
            (true, true) => Vec::new(),
            (true, false) => other.scaled_tangent(&self.value),
            (false, true) => self.scaled_tangent(&other.value),
            (false, false) => {
                self.zip_tangent(other, |a, b| a.mul(&other.value).add(&b.mul(&self.value)))
            }
        };
        MultiDual { value: self.value.mul(&other.value), tangent }
    }
    fn neg(&self) -> Self {
        MultiDual { value: self.value.neg(), tangent: self.tangent.iter().map(Field::neg).collect() }
    }
    fn inv(&self) -> Option<Self> {
        let r = self.value.inv()?;
        let factor = r.mul(&r).neg();
        Some(MultiDual { value: r, tangent: self.scaled_tangent(&factor) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type D = MultiDual<Scalar>;

    #[test]
    fn product_rule() {
        // f(x, y) = x^2 y at (3, 5): grad = (2xy, x^2) = (30, 9)
        let x = D::variable(Scalar::from_int(3), 0, 2);
        let y = D::variable(Scalar::from_int(5), 1, 2);
        let f = x.mul(&x).mul(&y);
        assert_eq!(f.value, Scalar::from_int(45));
        assert_eq!(f.derivative(0), Scalar::from_int(30));
        assert_eq!(f.derivative(1), Scalar::from_int(9));
    }

    #[test]
    fn quotient_rule() {
        // 1/(1 + x y) at (1, 2): d/dx = -y/(1+xy)^2 = -2/9
        let x = D::variable(Scalar::one(), 0, 2);
        let y = D::variable(Scalar::from_int(2), 1, 2);
        let f = D::one().add(&x.mul(&y)).inv().unwrap();
        assert_eq!(f.derivative(0), Scalar::from_ratio(-2, 9));
        assert_eq!(f.derivative(1), Scalar::from_ratio(-1, 9));
    }

    #[test]
    fn constants_compare_equal_to_padded_zero_tangents() {
        let a = D::constant(Scalar::from_int(4));
        let b = MultiDual { value: Scalar::from_int(4), tangent: vec![Scalar::zero(); 3] };
        assert_eq!(a, b);
        assert!(D { value: Scalar::zero(), tangent: vec![Scalar::one()] }.inv().is_none());
    }
}
