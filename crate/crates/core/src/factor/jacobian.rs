use crate::dual::MultiDual;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

use super::forward::{forward_product, unipotent_coords};
use super::{Chart, ZetaCoords};

fn check_len<F: Field>(chart: &Chart, zeta: &ZetaCoords<F>) -> Result<()> {
    if zeta.len() != chart.len() {
        return Err(Error::invalid(format!("expected {} coordinate pairs, got {}", chart.len(), zeta.len())));
    }
    Ok(())
}

/// `∏_k (1 + ζ_k⁻ ζ_k⁺)^{δ(h_{τ_k}) - 1}`.
pub fn jacobian_det_formula<F: Field>(chart: &Chart, zeta: &ZetaCoords<F>) -> Result<F> {
    check_len(chart, zeta)?;
    Ok((0..chart.len()).fold(F::one(), |acc, k| {
        acc.mul(&zeta.factor(k).powi(chart.delta(k) - 1).expect("nonnegative exponent"))
    }))
}

/// `∏_{k<j} (1 + ζ_j⁻ ζ_j⁺)^{τ_k(h_{τ_j})}`.
pub fn jacobian_double_product<F: Field>(chart: &Chart, zeta: &ZetaCoords<F>) -> Result<F> {
    check_len(chart, zeta)?;
    let mut acc = F::one();
    for j in 0..chart.len() {
        let e: i64 = (0..j).map(|k| chart.pairing(k, j)).sum();
        let s = zeta.factor(j);
        acc = acc.mul(&s.powi(e).ok_or_else(|| Error::Exceptional { index: j + 1, value: format!("{s:?}") })?);
    }
    Ok(acc)
}

/// `∂(l_1..l_n, u_1..u_n) / ∂(ζ_1⁻..ζ_n⁻, ζ_1⁺..ζ_n⁺)` by forward-mode differentiation.
pub fn jacobian_matrix(chart: &Chart, zeta: &ZetaCoords<Scalar>) -> Result<Matrix<Scalar>> {
    check_len(chart, zeta)?;
    let n = chart.len();
    let vars = 2 * n;
    let dual = ZetaCoords {
        minus: (0..n).map(|j| MultiDual::variable(zeta.minus[j].clone(), j, vars)).collect(),
        plus: (0..n).map(|j| MultiDual::variable(zeta.plus[j].clone(), n + j, vars)).collect(),
        h: vec![MultiDual::constant(Scalar::one()); chart.size()],
    };
    let p = forward_product(chart, &dual)?;
    let (l, u) = unipotent_coords(chart, &p)?;
    let rows = l.iter().chain(&u).map(|c| (0..vars).map(|v| c.derivative(v)).collect()).collect();
    Matrix::from_rows(rows)
}

/// Determinant of [`jacobian_matrix`] by fraction-free elimination.
pub fn jacobian_det_ad(chart: &Chart, zeta: &ZetaCoords<Scalar>) -> Result<Scalar> {
    Ok(jacobian_matrix(chart, zeta)?.determinant())
}
