use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{forward_map, Chart, ZetaCoords};

/// `δ(h_{τ_j}) - 1 = Σ_{k<j} τ_k(h_{τ_j})` for every `j`.
pub fn delta_identity_check(chart: &Chart) -> bool {
    (0..chart.len()).all(|j| chart.delta(j) - 1 == (0..j).map(|k| chart.pairing(k, j)).sum::<i64>())
}

/// Scaling `ζ_k^± ↦ t^{±ht(τ_k)} ζ_k^±` scales `l_j` by `t^{-ht(τ_j)}` and `u_j` by `t^{ht(τ_j)}`.
pub fn weight_grading_check(chart: &Chart, zeta: &ZetaCoords<Scalar>, t: &Scalar) -> Result<bool> {
    if t.is_zero() {
        return Err(Error::invalid("grading parameter must be nonzero"));
    }
    let pow = |e: i64| crate::field::Field::powi(t, e).expect("t is nonzero");
    let mut scaled = zeta.clone();
    for k in 0..chart.len() {
        let ht = chart.height(k);
        scaled.minus[k] = &zeta.minus[k] * &pow(-ht);
        scaled.plus[k] = &zeta.plus[k] * &pow(ht);
    }
    let (_, base) = forward_map(chart, zeta)?;
    let (_, moved) = forward_map(chart, &scaled)?;
    Ok((0..chart.len()).all(|j| {
        let ht = chart.height(j);
        moved.l[j] == &base.l[j] * &pow(-ht) && moved.u[j] == &base.u[j] * &pow(ht)
    }))
}
