//! Root data for `A_{n-1}` (as `GL(n)`), `B_r`, `C_r` and `D_r`.
//!
//! Roots are integer coefficient vectors over the basis `λ_1, …, λ_m` dual to
//! the diagonal Cartan subalgebra of the defining matrix realization
//! (`m = n` for `GL(n)`, `m = r` otherwise). The `λ_i` are orthonormal for
//! the invariant form used to compute pairings.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" | "GL" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            other => Err(Error::invalid(format!("unknown family {other:?}"))),
        }
    }
}

/// A root (or any weight) as coefficients over the `λ` basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn zero(dim: usize) -> Self {
        Root(vec![0; dim])
    }

    /// `c_a λ_a + c_b λ_b` in dimension `dim` (1-based indices).
    pub fn lambda(dim: usize, terms: &[(usize, i64)]) -> Self {
        let mut v = vec![0; dim];
        for &(k, c) in terms {
            v[k - 1] += c;
        }
        Root(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn dot(&self, other: &Root) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sqr(&self) -> i64 {
        self.dot(self)
    }

    /// `self(h_other) = 2 (self, other) / (other, other)`.
    pub fn pair(&self, coroot_of: &Root) -> i64 {
        2 * self.dot(coroot_of) / coroot_of.norm_sqr()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}λ{}", k + 1)?;
            } else {
                write!(f, "{sign}{mag}λ{}", k + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    positive_roots: Vec<Root>,
    simple_indices: Vec<usize>,
    cartan_pairing: Vec<Vec<i64>>,
    heights: Vec<i64>,
    simple_coeffs: Vec<Vec<i64>>,
    coroot_coeffs: Vec<Vec<i64>>,
    delta_coroot: Vec<i64>,
    lookup: HashMap<Root, usize>,
}

fn simple_roots(family: Family, rank: usize) -> Vec<Root> {
    match family {
        Family::A => (1..=rank).map(|k| Root::lambda(rank + 1, &[(k, 1), (k + 1, -1)])).collect(),
        Family::B | Family::C | Family::D => (1..=rank)
            .map(|k| match (family, k) {
                (Family::B, 1) => Root::lambda(rank, &[(1, 1)]),
                (Family::C, 1) => Root::lambda(rank, &[(1, 2)]),
                (Family::D, 1) => Root::lambda(rank, &[(1, 1), (2, 1)]),
                _ => Root::lambda(rank, &[(k, 1), (k - 1, -1)]),
            })
            .collect(),
    }
}

fn positive_roots(family: Family, rank: usize) -> Vec<Root> {
    let mut out = Vec::new();
    match family {
        Family::A => {
            let n = rank + 1;
            for i in 1..=n {
                for j in i + 1..=n {
                    out.push(Root::lambda(n, &[(i, 1), (j, -1)]));
                }
            }
        }
        _ => {
            for k in 1..=rank {
                match family {
                    Family::B => out.push(Root::lambda(rank, &[(k, 1)])),
                    Family::C => out.push(Root::lambda(rank, &[(k, 2)])),
                    _ => {}
                }
                for j in 1..k {
                    out.push(Root::lambda(rank, &[(k, 1), (j, 1)]));
                    out.push(Root::lambda(rank, &[(k, 1), (j, -1)]));
                }
            }
        }
    }
    out
}

/// Integer coordinates of `v` in the span of `basis`, solved exactly.
fn coordinates(basis: &[Vec<BigRational>], v: &[BigRational]) -> Option<Vec<i64>> {
    let cols = basis.len();
    let rows = v.len();
    let mut aug = Matrix::<Scalar>::zeros(rows, cols + 1);
    for i in 0..rows {
        for (j, b) in basis.iter().enumerate() {
            aug.set(i, j, Scalar::real(b[i].clone()));
        }
        aug.set(i, cols, Scalar::real(v[i].clone()));
    }
    let mut a = aug.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, r);
        let inv = a[r][c].recip()?;
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=cols {
                    a[i][j] = &a[i][j] - &(&f * &a[r][j]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut out = vec![0i64; cols];
    for (row, &c) in pivots.iter().enumerate() {
        let x = &a[row][cols];
        if !x.is_real() || !x.re().is_integer() {
            return None;
        }
        out[c] = x.re().to_integer().to_i64()?;
    }
    Some(out)
}

fn rational_vec(root: &Root, scale: BigRational) -> Vec<BigRational> {
    root.0.iter().map(|&x| BigRational::from_integer(BigInt::from(x)) * scale.clone()).collect()
}

fn coroot_vec(root: &Root) -> Vec<BigRational> {
    rational_vec(root, BigRational::new(BigInt::from(2), BigInt::from(root.norm_sqr())))
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min_rank = if family == Family::D { 2 } else { 1 };
        if rank < min_rank {
            return Err(Error::invalid(format!("{family}{rank}: rank must be at least {min_rank}")));
        }
        if rank > 64 {
            return Err(Error::invalid(format!("rank {rank} is too large")));
        }
        let positive_roots = positive_roots(family, rank);
        let lookup: HashMap<Root, usize> =
            positive_roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let simple = simple_roots(family, rank);
        let simple_indices: Vec<usize> = simple.iter().map(|s| lookup[s]).collect();

        let one = BigRational::from_integer(BigInt::from(1));
        let simple_basis: Vec<_> = simple.iter().map(|s| rational_vec(s, one.clone())).collect();
        let coroot_basis: Vec<_> = simple.iter().map(coroot_vec).collect();

        let mut simple_coeffs = Vec::new();
        let mut coroot_coeffs = Vec::new();
        for r in &positive_roots {
            let c = coordinates(&simple_basis, &rational_vec(r, one.clone()))
                .ok_or_else(|| Error::invalid(format!("{r} is not in the root lattice")))?;
            let d = coordinates(&coroot_basis, &coroot_vec(r))
                .ok_or_else(|| Error::invalid(format!("coroot of {r} is not in the coroot lattice")))?;
            simple_coeffs.push(c);
            coroot_coeffs.push(d);
        }
        let heights = simple_coeffs.iter().map(|c| c.iter().sum()).collect();
        let cartan_pairing: Vec<Vec<i64>> = positive_roots
            .iter()
            .map(|a| positive_roots.iter().map(|b| a.pair(b)).collect())
            .collect();
        let n = positive_roots.len();
        let delta_coroot = (0..n)
            .map(|b| {
                let twice: i64 = (0..n).map(|a| cartan_pairing[a][b]).sum();
                twice / 2
            })
            .collect();
        Ok(RootSystem {
            family,
            rank,
            positive_roots,
            simple_indices,
            cartan_pairing,
            heights,
            simple_coeffs,
            coroot_coeffs,
            delta_coroot,
            lookup,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of `λ` coordinates.
    pub fn dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple_indices
    }

    /// Simple root `α_k`, `k` 1-based.
    pub fn simple_root(&self, k: usize) -> &Root {
        &self.positive_roots[self.simple_indices[k - 1]]
    }

    /// 1-based label of a simple root, if it is one.
    pub fn simple_label(&self, root: &Root) -> Option<usize> {
        let idx = self.index_of(root)?;
        self.simple_indices.iter().position(|&s| s == idx).map(|p| p + 1)
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.lookup.get(root).copied()
    }

    pub fn is_positive(&self, root: &Root) -> bool {
        self.lookup.contains_key(root)
    }

    pub fn is_root(&self, root: &Root) -> bool {
        self.is_positive(root) || self.is_positive(&root.neg())
    }

    fn require(&self, root: &Root) -> Result<usize> {
        self.index_of(root)
            .ok_or_else(|| Error::invalid(format!("{root} is not a positive root of {}{}", self.family, self.rank)))
    }

    /// `α(h_β)` for positive roots.
    pub fn pairing(&self, alpha: &Root, beta: &Root) -> Result<i64> {
        Ok(self.cartan_pairing[self.require(alpha)?][self.require(beta)?])
    }

    pub fn pairing_by_index(&self, a: usize, b: usize) -> i64 {
        self.cartan_pairing[a][b]
    }

    pub fn pairing_table(&self) -> &[Vec<i64>] {
        &self.cartan_pairing
    }

    pub fn height(&self, root: &Root) -> Result<i64> {
        Ok(self.heights[self.require(root)?])
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn simple_coefficients(&self, root: &Root) -> Result<&[i64]> {
        Ok(&self.simple_coeffs[self.require(root)?])
    }

    /// Coefficients of `h_α` over the simple coroots.
    pub fn coroot_coefficients(&self, root: &Root) -> Result<&[i64]> {
        Ok(&self.coroot_coeffs[self.require(root)?])
    }

    /// `δ(h_α)`, half the sum of all positive roots evaluated on `h_α`.
    pub fn delta_coroot(&self, root: &Root) -> Result<i64> {
        Ok(self.delta_coroot[self.require(root)?])
    }

    pub fn delta_by_index(&self, idx: usize) -> i64 {
        self.delta_coroot[idx]
    }

    /// `δ(h_α)` as the sum of simple-coroot coefficients of `h_α`.
    pub fn delta_coroot_via_coroots(&self, root: &Root) -> Result<i64> {
        Ok(self.coroot_coefficients(root)?.iter().sum())
    }

    /// `α_i(h_{α_j})` over simple roots.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_indices
            .iter()
            .map(|&i| self.simple_indices.iter().map(|&j| self.cartan_pairing[i][j]).collect())
            .collect()
    }
}

#[derive(Serialize)]
struct RootSystemView<'a> {
    family: String,
    rank: usize,
    positive_roots: &'a [Root],
    simple_roots: Vec<&'a Root>,
    heights: &'a [i64],
    delta_coroot: &'a [i64],
}

impl Serialize for RootSystem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RootSystemView {
            family: self.family.to_string(),
            rank: self.rank,
            positive_roots: &self.positive_roots,
            simple_roots: self.simple_indices.iter().map(|&i| &self.positive_roots[i]).collect(),
            heights: &self.heights,
            delta_coroot: &self.delta_coroot,
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_systems() -> Vec<RootSystem> {
        let mut v = Vec::new();
        for r in 1..=5 {
            v.push(RootSystem::new(Family::A, r).unwrap());
            v.push(RootSystem::new(Family::B, r).unwrap());
            v.push(RootSystem::new(Family::C, r).unwrap());
        }
        for r in 2..=5 {
            v.push(RootSystem::new(Family::D, r).unwrap());
        }
        v
    }

    #[test]
    fn root_counts() {
        for rs in all_systems() {
            let r = rs.rank();
            let expected = match rs.family() {
                Family::A => (r + 1) * r / 2,
                Family::B | Family::C => r * r,
                Family::D => r * (r - 1),
            };
            assert_eq!(rs.num_positive(), expected, "{}{}", rs.family(), r);
        }
    }

    #[test]
    fn a2_roots_and_heights() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let want = [Root(vec![1, -1, 0]), Root(vec![1, 0, -1]), Root(vec![0, 1, -1])];
        assert_eq!(rs.positive_roots(), &want);
        assert_eq!(rs.heights(), &[1, 2, 1]);
    }

    #[test]
    fn c1_and_b2() {
        let c1 = RootSystem::new(Family::C, 1).unwrap();
        assert_eq!(c1.positive_roots(), &[Root(vec![2])]);
        assert_eq!(c1.delta_coroot(&Root(vec![2])).unwrap(), 1);
        let b2 = RootSystem::new(Family::B, 2).unwrap();
        for r in [vec![1, 0], vec![1, 1], vec![0, 1], vec![-1, 1]] {
            assert!(b2.is_positive(&Root(r)));
        }
        assert_eq!(b2.simple_root(1), &Root(vec![1, 0]));
        assert_eq!(b2.simple_root(2), &Root(vec![-1, 1]));
        let d3 = RootSystem::new(Family::D, 3).unwrap();
        assert_eq!(d3.simple_root(1), &Root(vec![1, 1, 0]));
        assert_eq!(d3.simple_root(2), &Root(vec![-1, 1, 0]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(RootSystem::new(Family::D, 1).is_err());
        assert!(RootSystem::new(Family::A, 0).is_err());
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        assert!(a2.pairing(&Root(vec![1, 1, 0]), &Root(vec![1, -1, 0])).is_err());
    }

    #[test]
    fn a3_longest_root_delta() {
        let rs = RootSystem::new(Family::A, 3).unwrap();
        assert_eq!(rs.delta_coroot(&Root(vec![1, 0, 0, -1])).unwrap(), 3);
        assert_eq!(rs.delta_coroot(&Root(vec![1, 0, -1, 0])).unwrap(), 2);
    }

    #[test]
    fn structural_invariants() {
        for rs in all_systems() {
            for (k, a) in rs.positive_roots().iter().enumerate() {
                assert_eq!(rs.pairing(a, a).unwrap(), 2);
                assert_eq!(rs.delta_coroot(a).unwrap(), rs.delta_coroot_via_coroots(a).unwrap());
                if rs.family().is_simply_laced() {
                    assert_eq!(rs.delta_by_index(k), rs.heights()[k]);
                }
                for b in rs.positive_roots() {
                    let s = a.add(b);
                    if rs.is_positive(&s) {
                        assert_eq!(rs.height(&s).unwrap(), rs.height(a).unwrap() + rs.height(b).unwrap());
                    }
                }
            }
            for &s in rs.simple_indices() {
                assert_eq!(rs.delta_by_index(s), 1);
            }
            let cm = rs.cartan_matrix();
            for (i, row) in cm.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(x, 2);
                    } else {
                        assert!(x <= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn serializes_roots_as_integer_arrays() {
        let rs = RootSystem::new(Family::A, 1).unwrap();
        let j = serde_json::to_string(&rs).unwrap();
        assert!(j.starts_with(r#"{"family":"A","rank":1,"positive_roots":[[1,-1]]"#), "{j}");
    }

    #[test]
    fn zero_root_displays() {
        assert_eq!(Root::zero(2).to_string(), "0");
        assert_eq!(Root(vec![2, -1]).to_string(), "2λ1-λ2");
    }
}
