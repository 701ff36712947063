use crate::error::{Error, Result};
use crate::matrep::{Realization, Representative};
use crate::matrix::Matrix;
use crate::rootsys::RootSystem;
use crate::scalar::Scalar;
use crate::weyl::{WeylElement, Word};

use super::{forward_product, Chart, ZetaCoords};

/// A reduced word `(k_1, …, k_L)` with `w = s_{k_L} ⋯ s_{k_1}`, peeling right descents.
pub fn reduced_word_of(rs: &RootSystem, w: &WeylElement) -> Result<Word> {
    if !w.is_member(rs) {
        return Err(Error::invalid("element is not in the Weyl group of this root system"));
    }
    let mut rest = w.clone();
    let mut word = Vec::new();
    while let Some(k) = (1..=rs.rank()).find(|&k| !rs.is_positive(&rest.act(rs.simple_root(k)))) {
        word.push(k);
        rest = rest.compose(&WeylElement::simple_reflection(rs, k)?);
    }
    Ok(Word(word))
}

/// Product of real representatives along [`reduced_word_of`].
pub fn weyl_rep_of(real: &Realization, w: &WeylElement) -> Result<Matrix<Scalar>> {
    let word = reduced_word_of(real.root_system(), w)?;
    let mut m = Matrix::identity(real.size());
    for &k in word.letters() {
        m = real.weyl_rep(k, Representative::Real).mul(&m);
    }
    Ok(m)
}

/// Simple indices chosen greedily (smallest first) with `w r_1 ⋯ r_{j-1} γ_j > 0`,
/// keeping `r_1 ⋯ r_{j-1} γ_j` positive. The result is a reduced word for `w₀ w`
/// of length `l(w₀) - l(w)`.
pub fn stratum_word(rs: &RootSystem, w: &WeylElement) -> Result<Word> {
    if !w.is_member(rs) {
        return Err(Error::invalid("element is not in the Weyl group of this root system"));
    }
    let mut prefix = WeylElement::identity(rs.dim());
    let mut word = Vec::new();
    loop {
        let next = (1..=rs.rank()).find(|&k| {
            let tau = prefix.act(rs.simple_root(k));
            rs.is_positive(&tau) && rs.is_positive(&w.act(&tau))
        });
        let Some(k) = next else { break };
        word.push(k);
        prefix = prefix.compose(&WeylElement::simple_reflection(rs, k)?);
    }
    debug_assert_eq!(word.len() + w.length(rs), rs.num_positive());
    Ok(Word(word))
}

/// `g = ẇ ∏_{j=n..1} ι_{τ_j}(g(ζ_j)) h` with the roots `τ_j` of [`stratum_word`].
pub fn forward_map_stratum(real: &Realization, w: &WeylElement, zeta: &ZetaCoords<Scalar>) -> Result<Matrix<Scalar>> {
    let rs = real.root_system();
    let expected = rs.num_positive() - w.length(rs);
    if zeta.len() != expected {
        return Err(Error::invalid(format!("stratum needs {expected} coordinate pairs, got {}", zeta.len())));
    }
    if zeta.h.len() != real.size() || zeta.h.iter().any(Scalar::is_zero) {
        return Err(Error::invalid(format!("torus part needs {} nonzero diagonal entries", real.size())));
    }
    let chart = Chart::new(real, &stratum_word(rs, w)?)?;
    let p = forward_product(&chart, zeta)?;
    Ok(weyl_rep_of(real, w)?.mul(&p).mul(&Matrix::from_diag(zeta.h.clone())))
}

/// The permutation `π` (row `i` ↦ column `π(i)`) with `g ∈ N⁻ P_π B⁺`, read from
/// the ranks of the leading `i × j` submatrices. Fails for singular `g`.
pub fn detect_permutation(g: &Matrix<Scalar>) -> Result<Vec<usize>> {
    let n = g.rows();
    if !g.is_square() || g.rank() != n {
        return Err(Error::invalid("permutation detection needs an invertible square matrix"));
    }
    let mut rank = vec![vec![0i64; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            let rows: Vec<usize> = (0..i).collect();
            let cols: Vec<usize> = (0..j).collect();
            rank[i][j] = g.select(&rows, &cols).rank() as i64;
        }
    }
    let mut perm = vec![usize::MAX; n];
    for i in 1..=n {
        for j in 1..=n {
            if rank[i][j] - rank[i - 1][j] - rank[i][j - 1] + rank[i - 1][j - 1] == 1 {
                perm[i - 1] = j - 1;
            }
        }
    }
    Ok(perm)
}

/// Whether `word` evaluates to `w₀ w`.
#[cfg(test)]
fn completes(rs: &RootSystem, word: &Word, w: &WeylElement) -> bool {
    use crate::weyl;
    weyl::evaluate(rs, word).unwrap() == weyl::longest_element(rs).compose(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::forward_map;
    use crate::rootsys::Family;
    use crate::weyl;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn support(m: &Matrix<Scalar>) -> Vec<usize> {
        (0..m.rows()).map(|i| (0..m.cols()).find(|&j| !m.get(i, j).is_zero()).unwrap()).collect()
    }

    #[test]
    fn reduced_words_evaluate_back() {
        for (f, r) in [(Family::A, 3), (Family::B, 2), (Family::C, 3), (Family::D, 3)] {
            let rs = RootSystem::new(f, r).unwrap();
            for word in weyl::enumerate_reduced_words(&rs, &weyl::longest_element(&rs), 100_000).unwrap().iter().take(5) {
                for cut in 0..=word.len() {
                    let prefix = Word(word.letters()[..cut].to_vec());
                    let w = weyl::evaluate(&rs, &prefix).unwrap();
                    let back = reduced_word_of(&rs, &w).unwrap();
                    assert_eq!(back.len(), cut);
                    assert_eq!(weyl::evaluate(&rs, &back).unwrap(), w);
                    let sw = stratum_word(&rs, &w).unwrap();
                    assert!(weyl::is_reduced(&rs, &sw).unwrap());
                    assert_eq!(sw.len() + cut, rs.num_positive());
                    assert!(completes(&rs, &sw, &w));
                }
            }
        }
    }

    #[test]
    fn extreme_strata() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let real = Realization::new(&rs).unwrap();
        let h = vec![Scalar::from_int(2), Scalar::from_int(3), Scalar::from_int(5)];
        let w0 = weyl::longest_element(&rs);
        let z0 = ZetaCoords::new(vec![], vec![], h.clone()).unwrap();
        let g = forward_map_stratum(&real, &w0, &z0).unwrap();
        assert_eq!(g, weyl_rep_of(&real, &w0).unwrap().mul(&Matrix::from_diag(h.clone())));
        assert_eq!(detect_permutation(&g).unwrap(), vec![2, 1, 0]);

        let id = WeylElement::identity(3);
        let zeta = ZetaCoords::new(
            vec![Scalar::from_int(1), Scalar::from_int(-2), Scalar::from_ratio(1, 2)],
            vec![Scalar::from_int(3), Scalar::from_int(1), Scalar::from_int(4)],
            h,
        )
        .unwrap();
        let chart = Chart::longest(&real, &"1,2,1".parse().unwrap()).unwrap();
        assert_eq!(stratum_word(&rs, &id).unwrap().letters(), &[1, 2, 1]);
        assert_eq!(forward_map_stratum(&real, &id, &zeta).unwrap(), forward_map(&chart, &zeta).unwrap().0);
    }

    #[test]
    fn detected_stratum_matches_for_every_gl_element() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for rank in 1..=3 {
            let rs = RootSystem::new(Family::A, rank).unwrap();
            let real = Realization::new(&rs).unwrap();
            for word in weyl::enumerate_reduced_words(&rs, &weyl::longest_element(&rs), 100_000).unwrap() {
                for cut in 0..=word.len() {
                    let w = weyl::evaluate(&rs, &Word(word.letters()[..cut].to_vec())).unwrap();
                    let n = rs.num_positive() - cut;
                    let mut q = || Scalar::from_ratio(rng.gen_range(-5..6), rng.gen_range(1..4));
                    let zeta = ZetaCoords::from_pairs((0..n).map(|_| q()).collect(), (0..n).map(|_| q()).collect(), rank + 1).unwrap();
                    let g = forward_map_stratum(&real, &w, &zeta).unwrap();
                    assert_eq!(detect_permutation(&g).unwrap(), support(&weyl_rep_of(&real, &w).unwrap()));
                }
            }
        }
    }

    #[test]
    fn gl3_simple_reflection_stratum() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let real = Realization::new(&rs).unwrap();
        let s1 = WeylElement::simple_reflection(&rs, 1).unwrap();
        let zeta = ZetaCoords::from_pairs(
            vec![Scalar::from_int(3), Scalar::from_ratio(-1, 2)],
            vec![Scalar::from_int(2), Scalar::from_int(7)],
            3,
        )
        .unwrap();
        let g = forward_map_stratum(&real, &s1, &zeta).unwrap();
        assert_eq!(detect_permutation(&g).unwrap(), vec![1, 0, 2]);
    }
}
