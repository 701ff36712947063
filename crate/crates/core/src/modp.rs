//! Arithmetic modulo word-sized primes `p ≡ 1 (mod 4)`, with Gaussian
//! rationals embedded through a square root of `-1`, plus the Chinese
//! remainder and rational reconstruction steps that lift results back.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::Field;
use crate::scalar::Scalar;

/// Primes just below `2^62`, all `≡ 1 (mod 4)`.
pub const PRIMES: [u64; 8] = [
    4611686018427387817,
    4611686018427387761,
    4611686018427387737,
    4611686018427387733,
    4611686018427387709,
    4611686018427387701,
    4611686018427387617,
    4611686018427387461,
];

const fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

const fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// `g^{(p-1)/4}` for the least quadratic non-residue `g`.
const fn sqrt_minus_one(p: u64) -> u64 {
    let mut g = 2;
    while pow_mod(g, (p - 1) / 2, p) != p - 1 {
        g += 1;
    }
    pow_mod(g, (p - 1) / 4, p)
}

/// An element of `F_P`. `CONJ` picks which square root of `-1` the imaginary unit maps to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp<const P: u64, const CONJ: bool>(u64);

impl<const P: u64, const CONJ: bool> Fp<P, CONJ> {
    const IOTA: u64 = if CONJ { P - sqrt_minus_one(P) } else { sqrt_minus_one(P) };

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn iota() -> Self {
        Fp(Self::IOTA)
    }
}

/// `r mod p`, `None` when `p` divides the denominator.
pub fn reduce(r: &BigRational, p: u64) -> Option<u64> {
    let modulus = BigInt::from(p);
    let num = r.numer().mod_floor(&modulus).to_u64()?;
    let den = r.denom().mod_floor(&modulus).to_u64()?;
    (den != 0).then(|| mul_mod(num, pow_mod(den, p - 2, p), p))
}

/// Whether every real and imaginary part reduces modulo `p`.
pub fn reducible(values: &[Scalar], p: u64) -> bool {
    values.iter().all(|s| reduce(s.re(), p).is_some() && reduce(s.im(), p).is_some())
}

impl<const P: u64, const CONJ: bool> Field for Fp<P, CONJ> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u64)
    }
    /// Callers check [`reducible`] first; an unreducible value maps to zero and
    /// is caught by the exact verification that follows every modular run.
    fn from_scalar(s: &Scalar) -> Self {
        let re = reduce(s.re(), P).unwrap_or(0);
        let im = reduce(s.im(), P).unwrap_or(0);
        Fp((re + mul_mod(im, Self::IOTA, P)) % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp(((self.0 as u128 + other.0 as u128) % P as u128) as u64)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp(((self.0 as u128 + (P - other.0) as u128) % P as u128) as u64)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(mul_mod(self.0, other.0, P))
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| Fp(pow_mod(self.0, P - 2, P)))
    }
}

/// Real and imaginary parts from the residues of `a + bι` and `a - bι`.
pub fn split_gaussian<const P: u64>(plus: u64, minus: u64) -> (u64, u64) {
    let (x, y) = (Fp::<P, false>(plus % P), Fp::<P, false>(minus % P));
    let half = Fp::<P, false>::from_i64(2).inv().expect("p is odd");
    let re = x.add(&y).mul(&half);
    let im = x.sub(&y).mul(&half).mul(&Fp::<P, false>::iota().inv().expect("ι is a unit"));
    (re.0, im.0)
}

/// Residues accumulated over several primes.
#[derive(Clone, Debug)]
pub struct Crt {
    modulus: BigInt,
    residues: Vec<BigInt>,
}

impl Crt {
    pub fn new(len: usize) -> Self {
        Crt { modulus: BigInt::one(), residues: vec![BigInt::zero(); len] }
    }

    /// Folds in `values mod p`.
    pub fn add_prime(&mut self, p: u64, values: &[u64]) {
        assert_eq!(values.len(), self.residues.len(), "residue count must stay fixed");
        let m_mod_p = self.modulus.mod_floor(&BigInt::from(p)).to_u64().expect("reduced below p");
        let m_inv = pow_mod(m_mod_p, p - 2, p);
        for (r, &v) in self.residues.iter_mut().zip(values) {
            let r_mod_p = r.mod_floor(&BigInt::from(p)).to_u64().expect("reduced below p");
            let step = mul_mod((v + p - r_mod_p) % p, m_inv, p);
            *r += &self.modulus * BigInt::from(step);
        }
        self.modulus *= BigInt::from(p);
    }

    /// Rational reconstruction of every residue, `None` if any has no small preimage.
    pub fn reconstruct(&self) -> Option<Vec<BigRational>> {
        self.residues.iter().map(|r| rational_reconstruction(r, &self.modulus)).collect()
    }
}

/// The fraction `a/b` with `a ≡ r b (mod m)` and `|a|, b ≤ √(m/2)`, if one exists.
pub fn rational_reconstruction(r: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1, t0, t1) = (r1, r2, t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = PRIMES[0];

    #[test]
    fn iota_squares_to_minus_one() {
        let (a, b) = (Fp::<P, false>::iota(), Fp::<P, true>::iota());
        assert_eq!(a.mul(&a), Fp::from_i64(-1));
        assert_eq!(b.mul(&b), Fp::from_i64(-1));
        assert_eq!(a.value() + b.value(), P);
    }

    #[test]
    fn field_laws_on_samples() {
        let a = Fp::<P, false>::from_scalar(&Scalar::from_ratio(-7, 3));
        let b = Fp::<P, false>::from_i64(11);
        assert_eq!(a.mul(&Fp::from_i64(3)), Fp::from_i64(-7));
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.mul(&a.inv().unwrap()), Fp::one());
        assert!(Fp::<P, false>::zero().inv().is_none());
    }

    #[test]
    fn gaussian_round_trip() {
        let s = Scalar::gaussian((-5, 7), (3, 4));
        let mut crt_re = Crt::new(1);
        let mut crt_im = Crt::new(1);
        for p_idx in 0..2 {
            let (re, im) = match p_idx {
                0 => split_gaussian::<{ PRIMES[0] }>(Fp::<{ PRIMES[0] }, false>::from_scalar(&s).value(), Fp::<{ PRIMES[0] }, true>::from_scalar(&s).value()),
                _ => split_gaussian::<{ PRIMES[1] }>(Fp::<{ PRIMES[1] }, false>::from_scalar(&s).value(), Fp::<{ PRIMES[1] }, true>::from_scalar(&s).value()),
            };
            crt_re.add_prime(PRIMES[p_idx], &[re]);
            crt_im.add_prime(PRIMES[p_idx], &[im]);
        }
        let re = crt_re.reconstruct().unwrap().remove(0);
        let im = crt_im.reconstruct().unwrap().remove(0);
        assert_eq!(Scalar::new(re, im), s);
    }

    #[test]
    fn reconstruction_needs_enough_modulus() {
        let big = BigRational::new(BigInt::from(1_000_000_007i64) * BigInt::from(999_999_937i64), BigInt::from(3));
        let mut one = Crt::new(1);
        one.add_prime(PRIMES[0], &[reduce(&big, PRIMES[0]).unwrap()]);
        assert_ne!(one.reconstruct().and_then(|v| v.into_iter().next()), Some(big.clone()));
        one.add_prime(PRIMES[1], &[reduce(&big, PRIMES[1]).unwrap()]);
        assert_eq!(one.reconstruct().unwrap()[0], big);
    }
}
