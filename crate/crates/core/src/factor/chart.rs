use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrep::{integer, Realization, RootTriple};
use crate::matrix::Matrix;
use crate::rootsys::{Root, RootSystem};
use crate::scalar::Scalar;
use crate::weyl::{self, Word};

use super::Side;

/// `exp(z x)` for a fixed nilpotent `x`, stored as the sparse terms `x^k / k!`.
#[derive(Debug, Clone)]
pub(crate) struct NilpotentExp {
    terms: Vec<Vec<(usize, usize, Scalar)>>,
}

impl NilpotentExp {
    fn new(x: &Matrix<Scalar>) -> Self {
        let mut terms = Vec::new();
        let mut power = x.clone();
        let mut k = 1i64;
        while !power.is_zero() {
            terms.push(power.entries());
            k += 1;
            power = power.mul(x).scale(&Scalar::from_ratio(1, k));
        }
        NilpotentExp { terms }
    }

    /// `m · exp(z x)`.
    pub(crate) fn right_apply<F: Field>(&self, m: &Matrix<F>, z: &F) -> Matrix<F> {
        if z.is_zero() {
            return m.clone();
        }
        let mut out = m.clone();
        let mut zk = z.clone();
        for (k, term) in self.terms.iter().enumerate() {
            if k > 0 {
                zk = zk.mul(z);
            }
            for (a, b, c) in term {
                let coeff = zk.mul(&F::from_scalar(c));
                for i in 0..m.rows() {
                    let mia = m.get(i, *a);
                    if !mia.is_zero() {
                        let v = out.get(i, *b).add(&mia.mul(&coeff));
                        out.set(i, *b, v);
                    }
                }
            }
        }
        out
    }
}

/// Everything the factorization algorithms need about one reduced word.
#[derive(Debug, Clone)]
pub struct Chart {
    real: Realization,
    word: Word,
    roots: Vec<Root>,
    gens: Vec<RootTriple>,
    coroots: Vec<Vec<i64>>,
    pairings: Vec<Vec<i64>>,
    deltas: Vec<i64>,
    heights: Vec<i64>,
    f_exp: Vec<NilpotentExp>,
    e_exp: Vec<NilpotentExp>,
    f_probe: Vec<(usize, usize, Scalar)>,
    e_probe: Vec<(usize, usize, Scalar)>,
}

impl Chart {
    /// Chart for any reduced word; most operations additionally need a word for `w₀`.
    pub fn new(real: &Realization, word: &Word) -> Result<Self> {
        let rs = real.root_system();
        let roots = weyl::ordering_from_word(rs, word)?.roots;
        let gens = real.conjugated_generators(word)?;
        let coroots = gens.iter().map(|g| g.h.diagonal().iter().map(integer).collect()).collect();
        let pairings = roots
            .iter()
            .map(|a| roots.iter().map(|b| rs.pairing(a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let deltas = roots.iter().map(|r| rs.delta_coroot(r)).collect::<Result<Vec<_>>>()?;
        let heights = roots.iter().map(|r| rs.height(r)).collect::<Result<Vec<_>>>()?;
        let probe = |x: &Matrix<Scalar>| x.entries().into_iter().next().expect("root vectors are nonzero");
        Ok(Chart {
            f_exp: gens.iter().map(|g| NilpotentExp::new(&g.f)).collect(),
            e_exp: gens.iter().map(|g| NilpotentExp::new(&g.e)).collect(),
            f_probe: gens.iter().map(|g| probe(&g.f)).collect(),
            e_probe: gens.iter().map(|g| probe(&g.e)).collect(),
            real: real.clone(),
            word: word.clone(),
            roots,
            gens,
            coroots,
            pairings,
            deltas,
            heights,
        })
    }

    /// Chart for a reduced word of the longest element.
    pub fn longest(real: &Realization, word: &Word) -> Result<Self> {
        let chart = Self::new(real, word)?;
        let n = real.root_system().num_positive();
        if chart.len() != n {
            return Err(Error::InvalidWord {
                index: chart.len().min(n),
                reason: format!("word has length {} but the longest element has length {n}", chart.len()),
            });
        }
        Ok(chart)
    }

    /// Chart of the canonical word for the realization's family and rank.
    pub fn canonical(real: &Realization) -> Result<Self> {
        let rs = real.root_system();
        Self::longest(real, &weyl::canonical_word(rs.family(), rs.rank())?)
    }

    pub fn realization(&self) -> &Realization {
        &self.real
    }

    pub fn root_system(&self) -> &RootSystem {
        self.real.root_system()
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Number of coordinate pairs.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Matrix size.
    pub fn size(&self) -> usize {
        self.real.size()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn generators(&self) -> &[RootTriple] {
        &self.gens
    }

    /// Diagonal of `h_{τ_j}` (0-based `j`).
    pub fn coroot(&self, j: usize) -> &[i64] {
        &self.coroots[j]
    }

    /// `τ_k(h_{τ_j})` (0-based).
    pub fn pairing(&self, k: usize, j: usize) -> i64 {
        self.pairings[k][j]
    }

    /// `δ(h_{τ_j})`.
    pub fn delta(&self, j: usize) -> i64 {
        self.deltas[j]
    }

    pub fn height(&self, j: usize) -> i64 {
        self.heights[j]
    }

    pub(crate) fn exp_of(&self, side: Side, j: usize) -> &NilpotentExp {
        match side {
            Side::Lower => &self.f_exp[j],
            Side::Upper => &self.e_exp[j],
        }
    }

    pub(crate) fn probe(&self, side: Side, j: usize) -> &(usize, usize, Scalar) {
        match side {
            Side::Lower => &self.f_probe[j],
            Side::Upper => &self.e_probe[j],
        }
    }

    /// `∏_j s_j^{h_{τ_j}}` as a diagonal, `None` if some needed `s_j` is zero.
    pub(crate) fn torus_power<F: Field>(&self, s: &[F]) -> std::result::Result<Vec<F>, usize> {
        let mut diag = vec![F::one(); self.size()];
        for (j, sj) in s.iter().enumerate() {
            for (p, &e) in self.coroots[j].iter().enumerate() {
                if e != 0 {
                    diag[p] = diag[p].mul(&sj.powi(e).ok_or(j)?);
                }
            }
        }
        Ok(diag)
    }
}
