//! Defining-representation matrices for the four classical families.
//!
//! Basis positions are ordered so that the positive root vectors are upper
//! triangular and the Cartan subalgebra is diagonal: `ε_1, …, ε_n` for
//! `GL(n)`; `ε_r, …, ε_1, (ε_0,) ε_{-1}, …, ε_{-r}` for the orthogonal and
//! symplectic groups, with the form pairing `ε_k` and `ε_{-k}`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::rootsys::{Family, Root, RootSystem};
use crate::scalar::Scalar;
use crate::weyl::{self, Word};

type M = Matrix<Scalar>;

/// Root vectors `f_τ`, `e_τ` and coroot `h_τ` for one position of an ordering.
#[derive(Debug, Clone, PartialEq)]
pub struct RootTriple {
    pub root: Root,
    pub f: M,
    pub e: M,
    pub h: M,
}

/// Which Weyl group representative `ι_γ(m)` is used for conjugation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representative {
    /// `m = [[0, -1], [1, 0]]`
    Real,
    /// `m = [[0, i], [i, 0]]`
    Imaginary,
}

impl Representative {
    pub fn matrix(self) -> M {
        let z = Scalar::zero;
        match self {
            Representative::Real => Matrix::from_rows(vec![vec![z(), Scalar::from_int(-1)], vec![Scalar::one(), z()]]),
            Representative::Imaginary => Matrix::from_rows(vec![vec![z(), Scalar::i()], vec![Scalar::i(), z()]]),
        }
        .expect("2x2")
    }
}

#[derive(Debug, Clone)]
pub struct Realization {
    rs: RootSystem,
    size: usize,
    weights: Vec<Root>,
    form: Option<M>,
    involution: Vec<Scalar>,
    simple: Vec<RootTriple>,
    reps: Vec<(M, M)>,
}

fn position_weights(family: Family, rank: usize) -> Vec<Root> {
    match family {
        Family::A => (1..=rank + 1).map(|k| Root::lambda(rank + 1, &[(k, 1)])).collect(),
        _ => {
            let mut w: Vec<Root> = (1..=rank).rev().map(|k| Root::lambda(rank, &[(k, 1)])).collect();
            if family == Family::B {
                w.push(Root::zero(rank));
            }
            w.extend((1..=rank).map(|k| Root::lambda(rank, &[(k, -1)])));
            w
        }
    }
}

fn invariant_form(family: Family, rank: usize, size: usize) -> Option<M> {
    if family == Family::A {
        return None;
    }
    let mut j = Matrix::zeros(size, size);
    for p in 0..size {
        let v = if family == Family::C && p >= rank { -1 } else { 1 };
        j.set(p, size - 1 - p, Scalar::from_int(v));
    }
    Some(j)
}

impl Realization {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let family = rs.family();
        let rank = rs.rank();
        let weights = position_weights(family, rank);
        let size = weights.len();
        let form = invariant_form(family, rank, size);
        let involution = (0..size)
            .map(|p| match family {
                // B: weights 1, 2, 4 on ε_k, ε_0, ε_{-k}
                Family::B if p == rank => Scalar::from_int(2),
                Family::B if p > rank => Scalar::from_int(4),
                _ => Scalar::one(),
            })
            .collect();
        let mut real = Realization { rs: rs.clone(), size, weights, form, involution, simple: Vec::new(), reps: Vec::new() };
        for k in 1..=rank {
            let root = rs.simple_root(k).clone();
            let e = real.root_vector(&root)?;
            let f = real.involution_transpose(&e);
            let h = e.commutator(&f);
            if real.evaluate_root(&root, &h) != Scalar::from_int(2) {
                return Err(Error::invalid(format!("normalisation failed for simple root {root}")));
            }
            real.simple.push(RootTriple { root, f, e, h });
        }
        for k in 1..=rank {
            let m = Representative::Real.matrix();
            let inv = m.inverse().expect("invertible");
            real.reps.push((real.iota_simple(k, &m)?, real.iota_simple(k, &inv)?));
        }
        Ok(real)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Matrix size `N`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Weight of each basis position.
    pub fn position_weights(&self) -> &[Root] {
        &self.weights
    }

    /// The invariant bilinear form, `None` for `GL(n)`.
    pub fn form(&self) -> Option<&M> {
        self.form.as_ref()
    }

    pub fn simple(&self, k: usize) -> &RootTriple {
        &self.simple[k - 1]
    }

    fn root_vector(&self, root: &Root) -> Result<M> {
        let n = self.size;
        let (a, b) = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.weights[a].add(&self.weights[b].neg()) == *root)
            .ok_or_else(|| Error::invalid(format!("{root} has no matrix position")))?;
        let unit = M::unit(n, a, b, Scalar::one());
        let Some(j) = &self.form else { return Ok(unit) };
        let j_inv = j.inverse().expect("nondegenerate form");
        let mirrored = j_inv.mul(&unit.transpose()).mul(j);
        let v = unit.sub(&mirrored);
        // long roots of C sit on the anti-diagonal and come out doubled
        if b == n - 1 - a {
            Ok(v.scale(&Scalar::from_ratio(1, 2)))
        } else {
            Ok(v)
        }
    }

    /// `D xᵀ D⁻¹`, the transpose twisted by the diagonal that makes it preserve the algebra.
    fn involution_transpose(&self, x: &M) -> M {
        let mut out = x.transpose();
        for i in 0..self.size {
            for j in 0..self.size {
                let v = out.get(i, j);
                if !v.is_zero() {
                    let s = &(v * &self.involution[i]) * &self.involution[j].recip().expect("nonzero");
                    out.set(i, j, s);
                }
            }
        }
        out
    }

    /// Cartan-involution inverse transpose `g ↦ D (g⁻¹)ᵀ D⁻¹`.
    pub fn inverse_transpose<F: Field>(&self, g: &Matrix<F>) -> Option<Matrix<F>> {
        let inv = g.inverse()?.transpose();
        let mut out = inv;
        for i in 0..self.size {
            for j in 0..self.size {
                if self.involution[i] != self.involution[j] {
                    let c = F::from_scalar(&(&self.involution[i] * &self.involution[j].recip().expect("nonzero")));
                    let v = out.get(i, j).mul(&c);
                    out.set(i, j, v);
                }
            }
        }
        Some(out)
    }

    /// `λ_k(H)` for a diagonal `H`: the entry at the position of weight `λ_k`.
    fn lambda_entry<F: Field>(&self, k: usize, diag: &[F]) -> F {
        let pos = self
            .weights
            .iter()
            .position(|w| w.0[k] == 1 && w.0.iter().filter(|&&c| c != 0).count() == 1)
            .expect("every λ has a position");
        diag[pos].clone()
    }

    /// `α(H)` for a diagonal Lie algebra element.
    pub fn evaluate_root(&self, root: &Root, h: &M) -> Scalar {
        let diag = h.diagonal();
        root.0.iter().enumerate().fold(Scalar::zero(), |acc, (k, &c)| {
            &acc + &(&self.lambda_entry(k, &diag) * &Scalar::from_int(c))
        })
    }

    /// The character `α(t) = ∏ λ_k(t)^{α_k}` of a diagonal group element.
    pub fn character<F: Field>(&self, root: &Root, torus: &[F]) -> Option<F> {
        let mut acc = F::one();
        for (k, &c) in root.0.iter().enumerate() {
            acc = acc.mul(&self.lambda_entry(k, torus).powi(c)?);
        }
        Some(acc)
    }

    /// The torus element with `λ_k ↦ values[k]`.
    pub fn torus_from_lambdas<F: Field>(&self, values: &[F]) -> Result<Vec<F>> {
        if values.len() != self.rs.dim() {
            return Err(Error::invalid(format!("expected {} torus coordinates", self.rs.dim())));
        }
        self.weights
            .iter()
            .map(|w| {
                let mut acc = F::one();
                for (k, &c) in w.0.iter().enumerate() {
                    acc = acc.mul(&values[k].powi(c).ok_or_else(|| Error::invalid("torus coordinates must be nonzero"))?);
                }
                Ok(acc)
            })
            .collect()
    }

    /// Whether a diagonal lies in the group (nonzero entries compatible with the form).
    pub fn is_torus_element(&self, diag: &[Scalar]) -> bool {
        if diag.len() != self.size || diag.iter().any(Scalar::is_zero) {
            return false;
        }
        self.preserves_form(&Matrix::from_diag(diag.to_vec()))
    }

    /// `gᵀ J g = J`; always true for `GL(n)`.
    pub fn preserves_form(&self, g: &M) -> bool {
        match &self.form {
            None => true,
            Some(j) => g.transpose().mul(j).mul(g) == *j,
        }
    }

    /// Whether `x` is in the Lie algebra of the form: `xᵀ J + J x = 0`.
    pub fn in_lie_algebra(&self, x: &M) -> bool {
        match &self.form {
            None => true,
            Some(j) => x.transpose().mul(j).add(&j.mul(x)).is_zero(),
        }
    }

    /// `ι_γ(m)` for `m ∈ SL(2)`, `k` the 1-based simple index.
    pub fn iota_simple(&self, k: usize, m: &M) -> Result<M> {
        if k == 0 || k > self.rs.rank() {
            return Err(Error::invalid(format!("no simple root {k}")));
        }
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::invalid("ι expects a 2x2 matrix"));
        }
        if m.determinant() != Scalar::one() {
            return Err(Error::invalid("ι expects a determinant-one matrix"));
        }
        Ok(self.iota_unchecked(k, m))
    }

    fn iota_unchecked(&self, k: usize, m: &M) -> M {
        let t = &self.simple[k - 1];
        let (a, b, c) = (m.get(0, 0), m.get(0, 1), m.get(1, 0));
        if a.is_zero() {
            // m = (m [[1,0],[-1,1]]) [[1,0],[1,1]]
            let shifted = Matrix::from_rows(vec![
                vec![a - b, b.clone()],
                vec![c - m.get(1, 1), m.get(1, 1).clone()],
            ])
            .expect("2x2");
            return self.iota_unchecked(k, &shifted).mul(&t.f.exp_series());
        }
        let a_inv = a.recip().expect("nonzero");
        let lower = t.f.scale(&(c * &a_inv)).exp_series();
        let upper = t.e.scale(&(b * &a_inv)).exp_series();
        let torus: Vec<Scalar> =
            t.h.diagonal().iter().map(|x| a.powi(integer(x)).expect("nonzero")).collect();
        lower.mul(&Matrix::from_diag(torus)).mul(&upper)
    }

    /// `ι_γ(m)` for the chosen representative `m` of the simple reflection.
    pub fn weyl_rep(&self, k: usize, kind: Representative) -> M {
        match kind {
            Representative::Real => self.reps[k - 1].0.clone(),
            Representative::Imaginary => self.iota_unchecked(k, &kind.matrix()),
        }
    }

    /// `w'_0 = 1, w'_j = r_j ⋯ r_1` built from real representatives.
    pub fn weyl_rep_chain(&self, word: &Word) -> Result<Vec<M>> {
        self.weyl_rep_chain_with(word, Representative::Real)
    }

    pub fn weyl_rep_chain_with(&self, word: &Word, kind: Representative) -> Result<Vec<M>> {
        weyl::evaluate(&self.rs, word)?;
        let mut chain = vec![M::identity(self.size)];
        for &k in word.letters() {
            let next = self.weyl_rep(k, kind).mul(chain.last().expect("nonempty"));
            chain.push(next);
        }
        Ok(chain)
    }

    /// `x_{τ_j} = (w'_{j-1})⁻¹ x_{γ_j} w'_{j-1}` for each position of a reduced word.
    pub fn conjugated_generators(&self, word: &Word) -> Result<Vec<RootTriple>> {
        self.conjugated_generators_with(word, Representative::Real)
    }

    pub fn conjugated_generators_with(&self, word: &Word, kind: Representative) -> Result<Vec<RootTriple>> {
        let ordering = weyl::ordering_from_word(&self.rs, word)?;
        let mut w = M::identity(self.size);
        let mut w_inv = M::identity(self.size);
        let mut out = Vec::with_capacity(word.len());
        for (&k, root) in word.letters().iter().zip(ordering.roots) {
            let t = &self.simple[k - 1];
            let conj = |x: &M| w_inv.mul(x).mul(&w);
            out.push(RootTriple { root, f: conj(&t.f), e: conj(&t.e), h: conj(&t.h) });
            let (rep, rep_inv) = match kind {
                Representative::Real => self.reps[k - 1].clone(),
                Representative::Imaginary => {
                    let r = self.weyl_rep(k, kind);
                    let ri = r.inverse().expect("invertible");
                    (r, ri)
                }
            };
            w = rep.mul(&w);
            w_inv = w_inv.mul(&rep_inv);
        }
        Ok(out)
    }
}

/// Integer value of an exact scalar known to be integral.
pub(crate) fn integer(x: &Scalar) -> i64 {
    use num_traits::ToPrimitive;
    assert!(x.is_real() && x.re().is_integer(), "expected an integer, got {x}");
    x.re().to_integer().to_i64().expect("small integer")
}
