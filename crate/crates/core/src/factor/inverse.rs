use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::modp::{reducible, split_gaussian, Crt, Fp, PRIMES};
use crate::scalar::Scalar;
use crate::series::Series;

use super::forward::{extract, forward_product, ordered_exp_product};
use super::{forward_map, jacobian_det_formula, ldu, ordered_exp_coords, Chart, OrderedExpCoords, Side, ZetaCoords};

/// Coordinates `η` of `g^{-t} = F(η) · h_dual`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualCoords<F> {
    pub minus: Vec<F>,
    pub plus: Vec<F>,
    /// `∏_j (1 + ζ_j⁻ ζ_j⁺)^{h_{τ_j}}` as a diagonal.
    pub h_dual: Vec<F>,
}

fn exceptional<F: Field>(index: usize, value: &F) -> Error {
    Error::Exceptional { index, value: format!("{value:?}") }
}

/// `∏_{j>k} s_j^{sign · τ_k(h_{τ_j})}`; on failure returns the 1-based index of a vanishing `s_j`.
fn tail_power<F: Field>(chart: &Chart, s: &[F], k: usize, sign: i64) -> Result<F> {
    let mut acc = F::one();
    for (j, sj) in s.iter().enumerate().skip(k + 1) {
        let e = sign * chart.pairing(k, j);
        if e != 0 {
            acc = acc.mul(&sj.powi(e).ok_or_else(|| exceptional(j + 1, sj))?);
        }
    }
    Ok(acc)
}

/// The transpose identity: `η_k⁻ = -(ζ_k⁺ / s_k) ∏_{j>k} s_j^{-τ_k(h_{τ_j})}` and
/// `η_k⁺ = -ζ_k⁻ s_k ∏_{j>k} s_j^{τ_k(h_{τ_j})}`, with `s_j = 1 + ζ_j⁻ ζ_j⁺`.
pub fn transpose_dual<F: Field>(chart: &Chart, zeta: &ZetaCoords<F>) -> Result<DualCoords<F>> {
    if zeta.len() != chart.len() {
        return Err(Error::invalid(format!("expected {} coordinate pairs, got {}", chart.len(), zeta.len())));
    }
    let s: Vec<F> = (0..zeta.len()).map(|j| zeta.factor(j)).collect();
    if let Some(j) = s.iter().position(Field::is_zero) {
        return Err(exceptional(j + 1, &s[j]));
    }
    let mut minus = Vec::with_capacity(s.len());
    let mut plus = Vec::with_capacity(s.len());
    for k in 0..s.len() {
        let down = tail_power(chart, &s, k, -1)?;
        let up = tail_power(chart, &s, k, 1)?;
        let sk_inv = s[k].inv().expect("checked nonzero");
        minus.push(zeta.plus[k].mul(&sk_inv).mul(&down).neg());
        plus.push(zeta.minus[k].mul(&s[k]).mul(&up).neg());
    }
    let h_dual = chart.torus_power(&s).map_err(|j| exceptional(j + 1, &s[j]))?;
    Ok(DualCoords { minus, plus, h_dual })
}

/// Lower coordinates of `F(0, …, 0, ζ_{k+1}, …, ζ_n)`.
fn tail_lower<F: Field>(chart: &Chart, minus: &[F], plus: &[F], k: usize) -> Result<F> {
    let mut tail = ZetaCoords::zero(chart.len(), chart.size());
    tail.minus[k + 1..].clone_from_slice(&minus[k + 1..]);
    tail.plus[k + 1..].clone_from_slice(&plus[k + 1..]);
    let p = forward_product(chart, &tail)?;
    let f = ldu(&p)?;
    Ok(extract(chart, &f.l, Side::Lower, Some(k)).swap_remove(k))
}

/// Descending solve for `ζ` given ordered exponential coordinates of `l` and `u`.
fn solve<F: Field>(chart: &Chart, l: &[F], u: &[F]) -> Result<(Vec<F>, Vec<F>)> {
    let n = chart.len();
    let p = ordered_exp_product(chart, l, Side::Lower)?.mul(&ordered_exp_product(chart, u, Side::Upper)?);
    let q = chart.realization().inverse_transpose(&p).expect("unipotent products are invertible");
    let dual = ldu(&q).map_err(|e| match e {
        Error::Stratum { index } => exceptional(index, &F::zero()),
        other => other,
    })?;
    let l_dual = ordered_exp_coords(chart, &dual.l, Side::Lower)?;

    let (mut zm, mut zp) = (vec![F::zero(); n], vec![F::zero(); n]);
    let (mut em, mut ep) = (vec![F::zero(); n], vec![F::zero(); n]);
    let mut s = vec![F::one(); n];
    for k in (0..n).rev() {
        zm[k] = l[k].sub(&tail_lower(chart, &zm, &zp, k)?);
        em[k] = l_dual[k].sub(&tail_lower(chart, &em, &ep, k)?);
        let down = tail_power(chart, &s, k, -1)?;
        let den = down.add(&em[k].mul(&zm[k]));
        let den_inv = den.inv().ok_or_else(|| exceptional(k + 1, &den))?;
        zp[k] = em[k].mul(&den_inv).neg();
        s[k] = F::one().add(&zm[k].mul(&zp[k]));
        ep[k] = zm[k].mul(&s[k]).mul(&tail_power(chart, &s, k, 1)?).neg();
    }
    Ok((zm, zp))
}

fn reproduces(chart: &Chart, zeta: &ZetaCoords<Scalar>, coords: &OrderedExpCoords<Scalar>) -> bool {
    matches!(forward_map(chart, zeta), Ok((_, c)) if c.l == coords.l && c.u == coords.u)
}

/// What the solve along a line says about `t = 0`.
enum Limit {
    /// Some coordinate has a pole of determined order: no regular preimage.
    Pole,
    /// The truncation order was too low (or the prime was unlucky).
    Undetermined,
    /// Residues of the real and imaginary parts of `ζ⁻` then `ζ⁺`.
    Values(Vec<u64>),
}

fn limit_embedded<const P: u64, const CONJ: bool>(chart: &Chart, line: &[(Scalar, Scalar)], prec: i64) -> Limit {
    let lift: Vec<Series<Fp<P, CONJ>>> =
        line.iter().map(|(c, v)| Series::linear(Fp::from_scalar(c), Fp::from_scalar(v), prec)).collect();
    let (l, u) = lift.split_at(chart.len());
    let Ok((zm, zp)) = solve(chart, l, u) else { return Limit::Undetermined };
    if zm.iter().chain(&zp).any(|x| !x.is_zero() && x.valuation() < 0) {
        return Limit::Pole;
    }
    match zm.iter().chain(&zp).map(Series::at_zero).collect::<Option<Vec<_>>>() {
        Some(v) => Limit::Values(v.into_iter().map(Fp::value).collect()),
        None => Limit::Undetermined,
    }
}

/// Runs both embeddings of `i` when needed and splits the results into real and imaginary parts.
fn limit_mod<const P: u64>(chart: &Chart, line: &[(Scalar, Scalar)], prec: i64, complex: bool) -> Limit {
    let plus = match limit_embedded::<P, false>(chart, line, prec) {
        Limit::Values(v) => v,
        other => return other,
    };
    let minus = if complex {
        match limit_embedded::<P, true>(chart, line, prec) {
            Limit::Values(v) => v,
            other => return other,
        }
    } else {
        plus.clone()
    };
    let mut out = Vec::with_capacity(2 * plus.len());
    for (a, b) in plus.into_iter().zip(minus) {
        let (re, im) = split_gaussian::<P>(a, b);
        out.extend([re, im]);
    }
    Limit::Values(out)
}

fn limit_at(index: usize, chart: &Chart, line: &[(Scalar, Scalar)], prec: i64, complex: bool) -> Limit {
    macro_rules! dispatch {
        ($($i:literal)*) => {
            match index {
                $($i => limit_mod::<{ PRIMES[$i] }>(chart, line, prec, complex),)*
                _ => Limit::Undetermined,
            }
        };
    }
    dispatch!(0 1 2 3 4 5 6 7)
}

/// Runs the solve over truncated Laurent series along `c + t v` and takes the
/// value at `t = 0`. The series arithmetic is done modulo word-sized primes;
/// the exact answer is lifted by Chinese remaindering and rational
/// reconstruction and accepted only if it reproduces `c` exactly.
fn solve_along_line(chart: &Chart, coords: &OrderedExpCoords<Scalar>) -> Option<ZetaCoords<Scalar>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1f2e_3d4c);
    let mut slope = || Scalar::from_int(rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 });
    let line: Vec<(Scalar, Scalar)> = coords.l.iter().chain(&coords.u).map(|c| (c.clone(), slope())).collect();
    let inputs: Vec<Scalar> = line.iter().flat_map(|(c, v)| [c.clone(), v.clone()]).collect();
    let complex = inputs.iter().any(|s| !s.is_real());
    let n = chart.len();
    'order: for prec in [3, 6, 12, 24, 48] {
        let mut crt = Crt::new(4 * n);
        for (index, &p) in PRIMES.iter().enumerate() {
            if !reducible(&inputs, p) {
                continue;
            }
            match limit_at(index, chart, &line, prec, complex) {
                Limit::Pole => return None,
                Limit::Undetermined => continue 'order,
                Limit::Values(v) => crt.add_prime(p, &v),
            }
            let Some(parts) = crt.reconstruct() else { continue };
            let mut values = parts.chunks(2).map(|c| Scalar::new(c[0].clone(), c[1].clone()));
            let minus: Vec<Scalar> = values.by_ref().take(n).collect();
            let plus: Vec<Scalar> = values.collect();
            let zeta = ZetaCoords { minus, plus, h: coords.h.clone() };
            if reproduces(chart, &zeta, coords) {
                let regular = !jacobian_det_formula(chart, &zeta).ok()?.is_zero();
                return regular.then_some(zeta);
            }
        }
        return None;
    }
    None
}

/// The rational inverse of [`forward_map`].
///
/// Solves through the factorization of `g^{-t}`; when a denominator of that
/// algorithm vanishes but the point may still be regular, the limit along a
/// fixed generic line is tried. Every result satisfies
/// `forward_map(inverse_map(c)) = c` exactly. Errors of kind exceptional-set
/// name the vanishing factor (1-based) or, when `g^{-t}` itself leaves the big
/// cell, the vanishing principal minor.
pub fn inverse_map(chart: &Chart, coords: &OrderedExpCoords<Scalar>) -> Result<ZetaCoords<Scalar>> {
    let n = chart.root_system().num_positive();
    if chart.len() != n {
        return Err(Error::InvalidWord { index: chart.len(), reason: "inverse needs a reduced word for the longest element".into() });
    }
    if coords.l.len() != n || coords.u.len() != n {
        return Err(Error::invalid(format!("expected {n} l and {n} u coordinates")));
    }
    if coords.h.len() != chart.size() || coords.h.iter().any(Scalar::is_zero) {
        return Err(Error::invalid(format!("torus part needs {} nonzero diagonal entries", chart.size())));
    }
    let first = match solve(chart, &coords.l, &coords.u) {
        Ok((minus, plus)) => {
            let zeta = ZetaCoords { minus, plus, h: coords.h.clone() };
            if reproduces(chart, &zeta, coords) {
                return Ok(zeta);
            }
            let j = (0..n).find(|&j| zeta.factor(j).is_zero()).unwrap_or(n - 1);
            exceptional(j + 1, &zeta.factor(j))
        }
        Err(e) if e.is_degenerate() => e,
        Err(e) => return Err(e),
    };
    solve_along_line(chart, coords).ok_or(first)
}
