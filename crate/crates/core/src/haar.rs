//! Haar measure in root subgroup coordinates and the `ζ ↔ η` change of
//! variables built on `a(η) = (1 - η⁻η⁺)^{-1/2}` (positive real branch only).

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::dual::MultiDual;
use crate::error::{Error, Result};
use crate::factor::{jacobian_det_formula, Chart, ZetaCoords};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::surd::Surd;

/// `∏_j |1 + ζ_j⁻ ζ_j⁺|^{2(δ(h_{τ_j}) - 1)}`, the density against Lebesgue measure in `ζ` and Haar measure on `H`.
pub fn haar_density(chart: &Chart, zeta: &ZetaCoords<Scalar>) -> Result<BigRational> {
    if zeta.len() != chart.len() {
        return Err(Error::invalid(format!("expected {} coordinate pairs, got {}", chart.len(), zeta.len())));
    }
    let s: Vec<Scalar> = (0..zeta.len()).map(|j| zeta.factor(j)).collect();
    Ok(density_from_factors(chart, &s))
}

fn density_from_factors(chart: &Chart, s: &[Scalar]) -> BigRational {
    s.iter().enumerate().fold(BigRational::one(), |acc, (j, sj)| {
        let e = chart.delta(j) - 1;
        acc * num_traits::pow(sj.norm_sqr(), e as usize)
    })
}

/// `|det ∂F|²`; agrees with [`haar_density`].
pub fn jacobian_modulus_sqr(chart: &Chart, zeta: &ZetaCoords<Scalar>) -> Result<BigRational> {
    Ok(jacobian_det_formula(chart, zeta)?.norm_sqr())
}

/// Result of [`zeta_from_eta`].
#[derive(Debug, Clone, PartialEq)]
pub struct EtaChange {
    pub minus: Vec<Surd>,
    pub plus: Vec<Surd>,
    /// `a(η_j)`
    pub a: Vec<Surd>,
    /// `∏_k a(η_k)^{h_{τ_k}}` as a diagonal.
    pub h_shift: Vec<Surd>,
}

fn check_pairs(chart: &Chart, minus: &[Surd], plus: &[Surd]) -> Result<()> {
    if minus.len() != chart.len() || plus.len() != chart.len() {
        return Err(Error::invalid(format!("expected {} coordinate pairs", chart.len())));
    }
    Ok(())
}

/// Exact product of two surds when it is a Gaussian rational.
fn rational_product(x: &Surd, y: &Surd) -> Option<Scalar> {
    x.mul(y).try_to_scalar()
}

fn positive_real(index: usize, value: Scalar) -> Result<BigRational> {
    if value.is_real() && value.re().is_positive() {
        Ok(value.re().clone())
    } else {
        Err(Error::Branch { index, value: value.to_string() })
    }
}

/// `a(η) = (1 - η⁻η⁺)^{-1/2}` on the positive branch; `index` is reported on failure.
pub fn branch_factor(index: usize, minus: &Surd, plus: &Surd) -> Result<Surd> {
    let product = rational_product(minus, plus)
        .ok_or_else(|| Error::Branch { index, value: minus.mul(plus).to_string() })?;
    let base = positive_real(index, &Scalar::one() - &product)?;
    Ok(Surd::sqrt(&base.recip()).expect("positive"))
}

fn scaled(chart: &Chart, a: &[Surd], j: usize, sign: i64, from: usize) -> Surd {
    (from..chart.len()).fold(Surd::from_scalar(Scalar::one()), |acc, k| {
        acc.mul(&a[k].powi(sign * chart.pairing(j, k)).expect("a is nonzero"))
    })
}

/// `ζ_j⁻ = ∏_{k>j} a_k^{-τ_j(h_{τ_k})} η_j⁻`, `ζ_j⁺ = ∏_{k≥j} a_k^{τ_j(h_{τ_k})} η_j⁺`.
pub fn zeta_from_eta(chart: &Chart, minus: &[Surd], plus: &[Surd]) -> Result<EtaChange> {
    check_pairs(chart, minus, plus)?;
    let a = (0..chart.len()).map(|j| branch_factor(j + 1, &minus[j], &plus[j])).collect::<Result<Vec<_>>>()?;
    let zm = (0..chart.len()).map(|j| scaled(chart, &a, j, -1, j + 1).mul(&minus[j])).collect();
    let zp = (0..chart.len()).map(|j| scaled(chart, &a, j, 1, j).mul(&plus[j])).collect();
    let h_shift = (0..chart.size())
        .map(|p| {
            (0..chart.len()).fold(Surd::from_scalar(Scalar::one()), |acc, k| {
                acc.mul(&a[k].powi(chart.coroot(k)[p]).expect("a is nonzero"))
            })
        })
        .collect();
    Ok(EtaChange { minus: zm, plus: zp, a, h_shift })
}

/// Inverse of [`zeta_from_eta`], with `a_j = (1 + ζ_j⁻ζ_j⁺)^{1/2}`.
pub fn eta_from_zeta(chart: &Chart, minus: &[Surd], plus: &[Surd]) -> Result<(Vec<Surd>, Vec<Surd>)> {
    check_pairs(chart, minus, plus)?;
    let a = (0..chart.len())
        .map(|j| {
            let product = rational_product(&minus[j], &plus[j])
                .ok_or_else(|| Error::Branch { index: j + 1, value: minus[j].mul(&plus[j]).to_string() })?;
            let s = positive_real(j + 1, &Scalar::one() + &product)?;
            Ok(Surd::sqrt(&s).expect("positive"))
        })
        .collect::<Result<Vec<_>>>()?;
    let em = (0..chart.len()).map(|j| scaled(chart, &a, j, 1, j + 1).mul(&minus[j])).collect();
    let ep = (0..chart.len()).map(|j| scaled(chart, &a, j, -1, j).mul(&plus[j])).collect();
    Ok((em, ep))
}

/// `haar_density(ζ(η)) · ∏ a(η_j)⁴ = ∏ a(η_j)^{4δ(h_{τ_j})}`.
pub fn density_transport_check(chart: &Chart, minus: &[Surd], plus: &[Surd]) -> Result<bool> {
    let change = zeta_from_eta(chart, minus, plus)?;
    let s = (0..chart.len())
        .map(|j| {
            rational_product(&change.minus[j], &change.plus[j])
                .map(|p| &Scalar::one() + &p)
                .ok_or_else(|| Error::invalid("1 + ζ⁻ζ⁺ is not rational"))
        })
        .collect::<Result<Vec<_>>>()?;
    let a4: Vec<BigRational> = change.a.iter().map(|a| positive_real(0, a.square()).map(|x| &x * &x)).collect::<Result<_>>()?;
    let lhs = a4.iter().fold(density_from_factors(chart, &s), |acc, x| acc * x);
    let rhs = a4
        .iter()
        .enumerate()
        .fold(BigRational::one(), |acc, (j, x)| acc * num_traits::pow(x.clone(), chart.delta(j) as usize));
    Ok(lhs == rhs)
}

/// Holomorphic `det ∂(l, u) / ∂(η⁻, η⁺)`, chaining the forward map through
/// `ζ(η)` with forward-mode derivatives. Needs every `a(η_j)` rational.
pub fn eta_jacobian_det(chart: &Chart, minus: &[Scalar], plus: &[Scalar]) -> Result<Scalar> {
    if minus.len() != chart.len() || plus.len() != chart.len() {
        return Err(Error::invalid(format!("expected {} coordinate pairs", chart.len())));
    }
    let n = chart.len();
    let vars = 2 * n;
    let half = Scalar::from_ratio(1, 2);
    let mut a = Vec::with_capacity(n);
    let em: Vec<MultiDual<Scalar>> = (0..n).map(|j| MultiDual::variable(minus[j].clone(), j, vars)).collect();
    let ep: Vec<MultiDual<Scalar>> = (0..n).map(|j| MultiDual::variable(plus[j].clone(), n + j, vars)).collect();
    for j in 0..n {
        let surd = branch_factor(j + 1, &Surd::from_scalar(minus[j].clone()), &Surd::from_scalar(plus[j].clone()))?;
        let value = surd
            .try_to_scalar()
            .ok_or_else(|| Error::invalid(format!("a(η_{}) = {surd} is irrational", j + 1)))?;
        // da = a³/2 (η⁺ dη⁻ + η⁻ dη⁺)
        let c = &(&(&value * &value) * &value) * &half;
        let mut tangent = vec![Scalar::zero(); vars];
        tangent[j] = &c * &plus[j];
        tangent[n + j] = &c * &minus[j];
        a.push(MultiDual { value, tangent });
    }
    let tail = |j: usize, sign: i64, from: usize| {
        (from..n).fold(MultiDual::constant(Scalar::one()), |acc: MultiDual<Scalar>, k| {
            acc.mul(&a[k].powi(sign * chart.pairing(j, k)).expect("a is nonzero"))
        })
    };
    let zeta = ZetaCoords {
        minus: (0..n).map(|j| tail(j, -1, j + 1).mul(&em[j])).collect(),
        plus: (0..n).map(|j| tail(j, 1, j).mul(&ep[j])).collect(),
        h: vec![MultiDual::constant(Scalar::one()); chart.size()],
    };
    let (l, u) = crate::factor::unipotent_coords_of(chart, &zeta)?;
    let rows = l.iter().chain(&u).map(|c| (0..vars).map(|v| c.derivative(v)).collect()).collect();
    Ok(Matrix::from_rows(rows)?.determinant())
}

/// `∏ a(η_j)^{2δ(h_{τ_j}) + 2}`, the value [`eta_jacobian_det`] actually takes.
pub fn eta_jacobian_expected(chart: &Chart, minus: &[Scalar], plus: &[Scalar]) -> Result<Scalar> {
    let mut acc = Surd::from_scalar(Scalar::one());
    for j in 0..chart.len() {
        let a = branch_factor(j + 1, &Surd::from_scalar(minus[j].clone()), &Surd::from_scalar(plus[j].clone()))?;
        acc = acc.mul(&a.powi(2 * chart.delta(j) + 2).expect("a is nonzero"));
    }
    acc.try_to_scalar().ok_or_else(|| Error::invalid("even powers of a(η) are rational"))
}
