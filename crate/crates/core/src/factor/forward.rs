use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

use super::{ldu, Chart, OrderedExpCoords, Side, ZetaCoords};

pub(crate) fn approx_equal<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> bool {
    a.rows() == b.rows()
        && a.cols() == b.cols()
        && (0..a.rows()).all(|i| (0..a.cols()).all(|j| a.get(i, j).approx_eq(b.get(i, j))))
}

/// `exp(c_n x_{τ_n}) ⋯ exp(c_1 x_{τ_1})` with `x = f` or `e`.
pub fn ordered_exp_product<F: Field>(chart: &Chart, coeffs: &[F], side: Side) -> Result<Matrix<F>> {
    if coeffs.len() != chart.len() {
        return Err(Error::invalid(format!("expected {} coordinates, got {}", chart.len(), coeffs.len())));
    }
    let mut m = Matrix::identity(chart.size());
    for j in (0..chart.len()).rev() {
        m = chart.exp_of(side, j).right_apply(&m, &coeffs[j]);
    }
    Ok(m)
}

/// Inverse of the ordered product restricted to the coordinates flagged in `keep`.
fn partial_inverse<F: Field>(chart: &Chart, coeffs: &[F], keep: &[bool], side: Side) -> Matrix<F> {
    let mut m = Matrix::identity(chart.size());
    for j in 0..chart.len() {
        if keep[j] {
            m = chart.exp_of(side, j).right_apply(&m, &coeffs[j].neg());
        }
    }
    m
}

/// Coefficients `c` with `m = exp(c_n x_{τ_n}) ⋯ exp(c_1 x_{τ_1})`.
///
/// Works up the height filtration. Once every coordinate of height below `k`
/// is known, `r = Q⁻¹ m` (with `Q` the ordered product of the known factors)
/// lies in the subgroup of height `≥ k`, and there the height-`k` part of
/// `r - 1` equals `Σ_{ht τ_j = k} c_j x_{τ_j}`.
pub fn ordered_exp_coords<F: Field>(chart: &Chart, m: &Matrix<F>, side: Side) -> Result<Vec<F>> {
    let n = chart.size();
    let shape_ok = m.rows() == n
        && m.cols() == n
        && match side {
            Side::Lower => m.is_lower_unitriangular(),
            Side::Upper => m.is_upper_unitriangular(),
        };
    if !shape_ok {
        let want = if side == Side::Lower { "lower" } else { "upper" };
        return Err(Error::invalid(format!("expected a {n}x{n} {want} unitriangular matrix")));
    }
    let coeffs = extract(chart, m, side, None);
    if !approx_equal(&ordered_exp_product(chart, &coeffs, side)?, m) {
        return Err(Error::invalid("matrix is not in the unipotent subgroup of the realization"));
    }
    Ok(coeffs)
}

/// The extraction behind [`ordered_exp_coords`] without shape or membership checks.
/// With `target` set, stops once that coordinate is known.
pub(crate) fn extract<F: Field>(chart: &Chart, m: &Matrix<F>, side: Side, target: Option<usize>) -> Vec<F> {
    let count = chart.len();
    let mut coeffs = vec![F::zero(); count];
    let mut known = vec![false; count];
    let mut levels: Vec<i64> = (0..count).map(|j| chart.height(j)).collect();
    levels.sort_unstable();
    levels.dedup();
    for level in levels {
        let q_inv = partial_inverse(chart, &coeffs, &known, side);
        for j in (0..count).filter(|&j| chart.height(j) == level) {
            let (a, b, x) = chart.probe(side, j);
            let entry = (0..m.rows()).fold(F::zero(), |acc, t| {
                let (p, q) = (q_inv.get(*a, t), m.get(t, *b));
                if p.is_zero() || q.is_zero() {
                    acc
                } else {
                    acc.add(&p.mul(q))
                }
            });
            coeffs[j] = entry.mul(&F::from_scalar(x).inv().expect("probe entries are nonzero"));
            known[j] = true;
        }
        if target.is_some_and(|t| known[t]) {
            break;
        }
    }
    coeffs
}

/// `∏_{j=n..1} ι_{τ_j}(g(ζ_j))`, the forward map without its torus factor.
pub fn forward_product<F: Field>(chart: &Chart, zeta: &ZetaCoords<F>) -> Result<Matrix<F>> {
    if zeta.len() != chart.len() {
        return Err(Error::invalid(format!("expected {} coordinate pairs, got {}", chart.len(), zeta.len())));
    }
    let mut m = Matrix::identity(chart.size());
    for j in (0..chart.len()).rev() {
        m = chart.exp_of(Side::Lower, j).right_apply(&m, &zeta.minus[j]);
        m = chart.exp_of(Side::Upper, j).right_apply(&m, &zeta.plus[j]);
    }
    Ok(m)
}

fn check_torus<F: Field>(chart: &Chart, h: &[F]) -> Result<()> {
    if h.len() != chart.size() {
        return Err(Error::invalid(format!("torus part needs {} diagonal entries, got {}", chart.size(), h.len())));
    }
    if h.iter().any(Field::is_zero) {
        return Err(Error::invalid("torus entries must be nonzero"));
    }
    Ok(())
}

/// `g = ∏_{j=n..1} ι_{τ_j}(g(ζ_j)) · h` and its coordinates `g = l·u·h`.
pub fn forward_map<F: Field>(chart: &Chart, zeta: &ZetaCoords<F>) -> Result<(Matrix<F>, OrderedExpCoords<F>)> {
    check_torus(chart, &zeta.h)?;
    let p = forward_product(chart, zeta)?;
    let coords = unipotent_coords(chart, &p)?;
    let mut g = p;
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            let v = g.get(i, j).mul(&zeta.h[j]);
            g.set(i, j, v);
        }
    }
    Ok((g, OrderedExpCoords { l: coords.0, u: coords.1, h: zeta.h.clone() }))
}

/// Coordinates of the `l` and `u` factors of `F(ζ)`, ignoring the torus part.
pub(crate) fn unipotent_coords_of<F: Field>(chart: &Chart, zeta: &ZetaCoords<F>) -> Result<(Vec<F>, Vec<F>)> {
    unipotent_coords(chart, &forward_product(chart, zeta)?)
}

/// Coordinates of the two factors of a product `p = l·u`.
pub(crate) fn unipotent_coords<F: Field>(chart: &Chart, p: &Matrix<F>) -> Result<(Vec<F>, Vec<F>)> {
    let f = ldu(p)?;
    if !f.d.iter().all(|x| x.approx_eq(&F::one())) {
        return Err(Error::invalid("product has a nontrivial torus part"));
    }
    Ok((ordered_exp_coords(chart, &f.l, Side::Lower)?, ordered_exp_coords(chart, &f.u, Side::Upper)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrep::Realization;
    use crate::rootsys::{Family, RootSystem};
    use crate::scalar::Scalar;

    fn gl3() -> Chart {
        let real = Realization::new(&RootSystem::new(Family::A, 2).unwrap()).unwrap();
        Chart::longest(&real, &"1,2,1".parse().unwrap()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn zero_coordinates_give_identity() {
        let chart = gl3();
        let (g, c) = forward_map(&chart, &ZetaCoords::zero(3, 3)).unwrap();
        assert!(g.is_identity());
        assert!(c.l.iter().chain(&c.u).all(Scalar::is_zero));
    }

    #[test]
    fn gl3_worked_point() {
        let chart = gl3();
        let zeta = ZetaCoords::from_pairs(ints(&[1, 2, 3]), ints(&[4, 5, 6]), 3).unwrap();
        let (_, c) = forward_map(&chart, &zeta).unwrap();
        assert_eq!(c.l, ints(&[13, 2, 3]));
        assert_eq!(c.u, ints(&[4, 5, 1]));
    }

    #[test]
    fn single_factor_gives_indicator() {
        let chart = Chart::canonical(&Realization::new(&RootSystem::new(Family::B, 2).unwrap()).unwrap()).unwrap();
        let z = Scalar::from_ratio(-3, 7);
        for k in 0..chart.len() {
            for side in [Side::Lower, Side::Upper] {
                let x = match side {
                    Side::Lower => &chart.generators()[k].f,
                    Side::Upper => &chart.generators()[k].e,
                };
                let m = x.scale(&z).exp_nilpotent().unwrap();
                let c = ordered_exp_coords(&chart, &m, side).unwrap();
                for (j, cj) in c.iter().enumerate() {
                    assert_eq!(*cj, if j == k { z.clone() } else { Scalar::zero() });
                }
            }
        }
    }

    #[test]
    fn rejects_wrong_shape() {
        let chart = gl3();
        let upper = Matrix::unit(3, 0, 1, Scalar::one()).add(&Matrix::identity(3));
        assert!(ordered_exp_coords(&chart, &upper, Side::Lower).is_err());
    }
}
