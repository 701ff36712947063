//! Weyl groups as signed permutations of the `λ` basis, reduced words and
//! the root orderings they induce.
//!
//! A word `[r_1, …, r_L]` (1-based simple indices) denotes the element
//! `r_L ⋯ r_1`, so `r_1` acts first. Its root ordering is
//! `τ_j = r_1 ⋯ r_{j-1} · γ_j`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Family, Root, RootSystem};

/// `λ_i ↦ sign[i] λ_{perm[i]}` (0-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<usize>,
    sign: Vec<i8>,
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        WeylElement { perm: (0..dim).collect(), sign: vec![1; dim] }
    }

    /// From an image table; rejects anything that is not a signed permutation.
    pub fn from_images(perm: Vec<usize>, sign: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        if sign.len() != n || sign.iter().any(|s| s.abs() != 1) {
            return Err(Error::invalid("signs must be ±1, one per coordinate"));
        }
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::invalid("not a permutation"));
            }
        }
        Ok(WeylElement { perm, sign })
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn images(&self) -> (&[usize], &[i8]) {
        (&self.perm, &self.sign)
    }

    /// The simple reflection `s_k` (1-based) of `rs`.
    pub fn simple_reflection(rs: &RootSystem, k: usize) -> Result<Self> {
        if k == 0 || k > rs.rank() {
            return Err(Error::invalid(format!("no simple reflection s{k} in {}{}", rs.family(), rs.rank())));
        }
        let mut w = Self::identity(rs.dim());
        let swap = |w: &mut WeylElement, a: usize, b: usize| {
            w.perm.swap(a, b);
        };
        match (rs.family(), k) {
            (Family::A, _) => swap(&mut w, k - 1, k),
            (Family::B | Family::C, 1) => w.sign[0] = -1,
            (Family::D, 1) => {
                swap(&mut w, 0, 1);
                w.sign[0] = -1;
                w.sign[1] = -1;
            }
            (Family::D, 2) => swap(&mut w, 0, 1),
            _ => swap(&mut w, k - 1, k - 2),
        }
        Ok(w)
    }

    pub fn act(&self, root: &Root) -> Root {
        let mut out = vec![0; root.dim()];
        for (i, &c) in root.0.iter().enumerate() {
            out[self.perm[i]] += c * self.sign[i] as i64;
        }
        Root(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.dim();
        let mut perm = vec![0; n];
        let mut sign = vec![1; n];
        for i in 0..n {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            sign[i] = other.sign[i] * self.sign[j];
        }
        WeylElement { perm, sign }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.dim();
        let mut perm = vec![0; n];
        let mut sign = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            sign[self.perm[i]] = self.sign[i];
        }
        WeylElement { perm, sign }
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots().iter().filter(|a| !rs.is_positive(&self.act(a))).count()
    }

    /// Positive roots sent to negative roots.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<Root> {
        rs.positive_roots().iter().filter(|a| !rs.is_positive(&self.act(a))).cloned().collect()
    }

    pub fn is_member(&self, rs: &RootSystem) -> bool {
        self.dim() == rs.dim() && rs.positive_roots().iter().all(|a| rs.is_root(&self.act(a)))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.dim())
            .map(|i| {
                let s = if self.sign[i] < 0 { "-" } else { "" };
                format!("λ{}→{s}λ{}", i + 1, self.perm[i] + 1)
            })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// A word in the simple reflections, `r_1` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        s.split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad word letter {p:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

fn check_letters(rs: &RootSystem, word: &Word) -> Result<()> {
    for (j, &k) in word.0.iter().enumerate() {
        if k == 0 || k > rs.rank() {
            return Err(Error::InvalidWord {
                index: j + 1,
                reason: format!("letter {k} is not a simple index of {}{}", rs.family(), rs.rank()),
            });
        }
    }
    Ok(())
}

/// `r_L ⋯ r_1`.
pub fn evaluate(rs: &RootSystem, word: &Word) -> Result<WeylElement> {
    check_letters(rs, word)?;
    let mut w = WeylElement::identity(rs.dim());
    for &k in &word.0 {
        w = WeylElement::simple_reflection(rs, k)?.compose(&w);
    }
    Ok(w)
}

/// 1-based position of the first letter at which the word stops being reduced.
pub fn first_non_reduced(rs: &RootSystem, word: &Word) -> Result<Option<usize>> {
    check_letters(rs, word)?;
    let mut w = WeylElement::identity(rs.dim());
    for (j, &k) in word.0.iter().enumerate() {
        // l(s_k w) > l(w) iff w^{-1}(α_k) > 0
        if !rs.is_positive(&w.inverse().act(rs.simple_root(k))) {
            return Ok(Some(j + 1));
        }
        w = WeylElement::simple_reflection(rs, k)?.compose(&w);
    }
    Ok(None)
}

pub fn is_reduced(rs: &RootSystem, word: &Word) -> Result<bool> {
    Ok(first_non_reduced(rs, word)?.is_none())
}

fn require_reduced(rs: &RootSystem, word: &Word) -> Result<()> {
    if let Some(index) = first_non_reduced(rs, word)? {
        return Err(Error::InvalidWord { index, reason: "word is not reduced".into() });
    }
    Ok(())
}

/// Found by ascending through simple reflections until no positive root is left unflipped.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    longest_word(rs).1
}

/// A reduced word for `w₀` together with `w₀`.
pub fn longest_word(rs: &RootSystem) -> (Word, WeylElement) {
    let mut w = WeylElement::identity(rs.dim());
    let mut word = Vec::new();
    'grow: loop {
        for k in 1..=rs.rank() {
            if rs.is_positive(&w.inverse().act(rs.simple_root(k))) {
                w = WeylElement::simple_reflection(rs, k).expect("valid index").compose(&w);
                word.push(k);
                continue 'grow;
            }
        }
        break;
    }
    (Word(word), w)
}

/// A uniformly chosen ascent at each step until `w₀` is reached.
pub fn random_reduced_word<R: Rng + ?Sized>(rs: &RootSystem, rng: &mut R) -> Word {
    let mut w = WeylElement::identity(rs.dim());
    let mut word = Vec::with_capacity(rs.num_positive());
    loop {
        let ascents: Vec<usize> =
            (1..=rs.rank()).filter(|&k| rs.is_positive(&w.inverse().act(rs.simple_root(k)))).collect();
        if ascents.is_empty() {
            return Word(word);
        }
        let k = ascents[rng.gen_range(0..ascents.len())];
        w = WeylElement::simple_reflection(rs, k).expect("valid index").compose(&w);
        word.push(k);
    }
}

/// A sequence of positive roots, usually induced by a reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootOrdering {
    pub roots: Vec<Root>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub word: Option<Word>,
}

impl RootOrdering {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Positions in the root system's positive-root list.
    pub fn indices(&self, rs: &RootSystem) -> Vec<usize> {
        self.roots.iter().map(|r| rs.index_of(r).expect("ordering holds positive roots")).collect()
    }
}

/// `τ_j = r_1 ⋯ r_{j-1} · γ_j`; rejects non-reduced words.
pub fn ordering_from_word(rs: &RootSystem, word: &Word) -> Result<RootOrdering> {
    require_reduced(rs, word)?;
    let mut prefix = WeylElement::identity(rs.dim());
    let mut roots = Vec::with_capacity(word.len());
    for &k in &word.0 {
        roots.push(prefix.act(rs.simple_root(k)));
        prefix = prefix.compose(&WeylElement::simple_reflection(rs, k)?);
    }
    Ok(RootOrdering { roots, word: Some(word.clone()) })
}

/// Recovers the unique word inducing a full ordering of the positive roots.
pub fn validate_ordering(rs: &RootSystem, ordering: &[Root]) -> Result<Word> {
    let n = rs.num_positive();
    if ordering.len() != n {
        return Err(Error::invalid(format!("ordering has {} roots, expected {n}", ordering.len())));
    }
    let mut seen = vec![false; n];
    for (j, r) in ordering.iter().enumerate() {
        match rs.index_of(r) {
            Some(idx) if !seen[idx] => seen[idx] = true,
            _ => return Err(Error::InvalidOrdering { index: j + 1 }),
        }
    }
    let mut prefix_inv = WeylElement::identity(rs.dim());
    let mut word = Vec::with_capacity(n);
    for (j, tau) in ordering.iter().enumerate() {
        let gamma = prefix_inv.act(tau);
        let k = rs.simple_label(&gamma).ok_or(Error::InvalidOrdering { index: j + 1 })?;
        word.push(k);
        prefix_inv = WeylElement::simple_reflection(rs, k)?.compose(&prefix_inv);
    }
    let word = Word(word);
    if let Some(index) = first_non_reduced(rs, &word)? {
        return Err(Error::InvalidOrdering { index });
    }
    Ok(word)
}

fn canonical_block(family: Family, k: usize) -> Vec<usize> {
    match family {
        Family::A => (1..=k).rev().collect(),
        Family::B | Family::C => (2..=k).rev().chain(1..=k).collect(),
        Family::D => match k {
            1 => Vec::new(),
            2 => vec![1, 2],
            _ => {
                let middle = if k % 2 == 1 { [2, 1] } else { [1, 2] };
                (3..=k).rev().chain(middle).chain(3..=k).collect()
            }
        },
    }
}

/// The stable word whose prefixes are reduced words for the longest elements of the
/// nested subgroups of rank `1, 2, …, rank`.
pub fn canonical_word(family: Family, rank: usize) -> Result<Word> {
    RootSystem::new(family, rank)?;
    Ok(Word((1..=rank).flat_map(|k| canonical_block(family, k)).collect()))
}

fn require_longest(rs: &RootSystem, word: &Word) -> Result<()> {
    require_reduced(rs, word)?;
    if word.len() != rs.num_positive() {
        return Err(Error::InvalidWord {
            index: word.len(),
            reason: format!("word has length {}, the longest element has length {}", word.len(), rs.num_positive()),
        });
    }
    Ok(())
}

/// The same letters in reverse order; again a reduced word for `w₀`.
pub fn word_reverse(rs: &RootSystem, word: &Word) -> Result<Word> {
    require_longest(rs, word)?;
    Ok(word.reversed())
}

/// Replaces each `s_k` by `w₀ s_k w₀`, the reflection in `-w₀ α_k`.
pub fn word_conjugate_w0(rs: &RootSystem, word: &Word) -> Result<Word> {
    require_longest(rs, word)?;
    let w0 = longest_element(rs);
    let map: Vec<usize> = (1..=rs.rank())
        .map(|k| rs.simple_label(&w0.act(rs.simple_root(k)).neg()).expect("-w0 permutes simple roots"))
        .collect();
    Ok(Word(word.0.iter().map(|&k| map[k - 1]).collect()))
}

/// Every reduced word for `w`, sorted; fails once more than `cap` words are found.
pub fn enumerate_reduced_words(rs: &RootSystem, w: &WeylElement, cap: usize) -> Result<Vec<Word>> {
    fn go(
        rs: &RootSystem,
        reflections: &[WeylElement],
        w: &WeylElement,
        suffix: &mut Vec<usize>,
        out: &mut Vec<Word>,
        cap: usize,
    ) -> Result<()> {
        let inv = w.inverse();
        let mut any = false;
        for k in 1..=rs.rank() {
            // w = s_k w' with l(w') < l(w) iff w^{-1} α_k < 0
            if rs.is_positive(&inv.act(rs.simple_root(k))) {
                continue;
            }
            any = true;
            suffix.push(k);
            go(rs, reflections, &reflections[k - 1].compose(w), suffix, out, cap)?;
            suffix.pop();
        }
        if !any {
            out.push(Word(suffix.iter().rev().copied().collect()));
            if out.len() > cap {
                return Err(Error::Budget { budget: cap });
            }
        }
        Ok(())
    }
    if !w.is_member(rs) {
        return Err(Error::invalid("element does not belong to this Weyl group"));
    }
    let reflections: Vec<WeylElement> =
        (1..=rs.rank()).map(|k| WeylElement::simple_reflection(rs, k)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    go(rs, &reflections, w, &mut Vec::new(), &mut out, cap)?;
    out.sort();
    Ok(out)
}

/// Number of reduced words of `w` by memoised descent recursion.
pub fn count_reduced_words(rs: &RootSystem, w: &WeylElement) -> BigUint {
    fn go(rs: &RootSystem, w: &WeylElement, memo: &mut HashMap<WeylElement, BigUint>) -> BigUint {
        if let Some(c) = memo.get(w) {
            return c.clone();
        }
        let inv = w.inverse();
        let mut total = BigUint::from(0u32);
        let mut any = false;
        for k in 1..=rs.rank() {
            if !rs.is_positive(&inv.act(rs.simple_root(k))) {
                any = true;
                let s = WeylElement::simple_reflection(rs, k).expect("valid index");
                total += go(rs, &s.compose(w), memo);
            }
        }
        if !any {
            total = BigUint::one();
        }
        memo.insert(w.clone(), total.clone());
        total
    }
    go(rs, w, &mut HashMap::new())
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of reduced words of the longest element of `S_n`:
/// `C(n,2)! / (1^{n-1} 3^{n-2} ⋯ (2n-3)^1)`.
pub fn stanley_count(n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::invalid("the count is defined for n >= 2"));
    }
    let num = factorial(n * (n - 1) / 2);
    let den = (1..n).fold(BigUint::one(), |acc, k| acc * BigUint::from(2 * k - 1).pow((n - k) as u32));
    Ok(num / den)
}

/// The printed hyperoctahedral count formula, evaluated literally with `n = r`:
/// `(r²)! / (∏_{i=1}^{n} (2i-1)^{n-i} · ∏_{j=0}^{n-3} ∏_{k=1}^{n-j-2} 2(j+2k))`.
///
/// It disagrees with enumeration (e.g. 24 vs 2 at rank 2), so it is only ever
/// reported next to the enumerated count.
pub fn kraskiewicz_printed(r: u64) -> BigRational {
    let n = r;
    let num = factorial(r * r);
    let mut den = BigUint::one();
    for i in 1..=n {
        den *= BigUint::from(2 * i - 1).pow((n - i) as u32);
    }
    if n >= 3 {
        for j in 0..=n - 3 {
            for k in 1..=n - j - 2 {
                den *= BigUint::from(2 * (j + 2 * k));
            }
        }
    }
    BigRational::new(num.into(), den.into())
}

/// Approximate size of a rational count, for reporting.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, r: usize) -> RootSystem {
        RootSystem::new(f, r).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Every signed permutation that is a symmetry of the root system.
    fn brute_force_group(rs: &RootSystem) -> Vec<WeylElement> {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = rs.dim();
        let signed = rs.family() != Family::A;
        let mut out = Vec::new();
        for p in perms(n) {
            for mask in 0..(if signed { 1u32 << n } else { 1 }) {
                let sign: Vec<i8> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                if rs.family() == Family::D && sign.iter().filter(|&&s| s < 0).count() % 2 == 1 {
                    continue;
                }
                let e = WeylElement::from_images(p.clone(), sign).unwrap();
                if e.is_member(rs) {
                    out.push(e);
                }
            }
        }
        out
    }

    #[test]
    fn a2_action() {
        let a2 = rs(Family::A, 2);
        let s1 = WeylElement::simple_reflection(&a2, 1).unwrap();
        assert_eq!(s1.act(&Root(vec![0, 1, -1])), Root(vec![1, 0, -1]));
        let id = WeylElement::identity(3);
        assert_eq!(id.act(&Root(vec![1, 0, -1])), Root(vec![1, 0, -1]));
        assert_eq!(id.length(&a2), 0);
    }

    #[test]
    fn b2_first_reflection_negates_lambda1() {
        let b2 = rs(Family::B, 2);
        let s1 = WeylElement::simple_reflection(&b2, 1).unwrap();
        assert_eq!(s1.act(&Root(vec![1, 0])), Root(vec![-1, 0]));
    }

    #[test]
    fn reflections_are_involutions_matching_root_reflections() {
        for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let sys = rs(f, r);
            for k in 1..=r {
                let s = WeylElement::simple_reflection(&sys, k).unwrap();
                assert_eq!(s.compose(&s), WeylElement::identity(sys.dim()));
                let alpha = sys.simple_root(k);
                for beta in sys.positive_roots() {
                    // s_α(β) = β - β(h_α) α
                    let c = beta.pair(alpha);
                    let expect = Root(beta.0.iter().zip(&alpha.0).map(|(b, a)| b - c * a).collect());
                    assert_eq!(s.act(beta), expect);
                }
            }
        }
    }

    #[test]
    fn longest_elements() {
        let a2 = rs(Family::A, 2);
        let w0 = longest_element(&a2);
        assert_eq!(w0.images().0, &[2, 1, 0]);
        assert_eq!(w0.length(&a2), 3);
        let a1 = rs(Family::A, 1);
        assert_eq!(longest_element(&a1), WeylElement::simple_reflection(&a1, 1).unwrap());
        let b2 = rs(Family::B, 2);
        assert_eq!(longest_element(&b2).length(&b2), 4);

        // brute force over the group of order 8
        let c2 = rs(Family::C, 2);
        let group = brute_force_group(&c2);
        assert_eq!(group.len(), 8);
        let longest = group.iter().max_by_key(|g| g.length(&c2)).unwrap();
        assert_eq!(longest.length(&c2), 4);
        assert_eq!(longest, &WeylElement::from_images(vec![0, 1], vec![-1, -1]).unwrap());
        assert_eq!(&longest_element(&c2), longest);
        assert_eq!(group.iter().map(|g| g.length(&c2)).max(), Some(4));
    }

    #[test]
    fn brute_force_group_orders() {
        assert_eq!(brute_force_group(&rs(Family::A, 3)).len(), 24);
        assert_eq!(brute_force_group(&rs(Family::B, 3)).len(), 48);
        assert_eq!(brute_force_group(&rs(Family::D, 3)).len(), 24);
        for (f, r) in [(Family::B, 2), (Family::D, 3), (Family::A, 3)] {
            let sys = rs(f, r);
            let max = brute_force_group(&sys).iter().map(|g| g.length(&sys)).max().unwrap();
            assert_eq!(max, sys.num_positive());
        }
    }

    #[test]
    fn example_orderings() {
        let a2 = rs(Family::A, 2);
        let o = ordering_from_word(&a2, &w("1,2,1")).unwrap();
        assert_eq!(o.roots, vec![Root(vec![1, -1, 0]), Root(vec![1, 0, -1]), Root(vec![0, 1, -1])]);
        for k in 1..=2 {
            let single = ordering_from_word(&a2, &Word(vec![k])).unwrap();
            assert_eq!(single.roots, vec![a2.simple_root(k).clone()]);
        }
        assert!(matches!(
            ordering_from_word(&a2, &w("1,1")),
            Err(Error::InvalidWord { index: 2, .. })
        ));
        assert!(ordering_from_word(&a2, &w("1,4")).is_err());
    }

    #[test]
    fn validate_examples() {
        let a2 = rs(Family::A, 2);
        let good = [Root(vec![1, -1, 0]), Root(vec![1, 0, -1]), Root(vec![0, 1, -1])];
        assert_eq!(validate_ordering(&a2, &good).unwrap(), w("1,2,1"));
        let bad = [Root(vec![1, 0, -1]), Root(vec![1, -1, 0]), Root(vec![0, 1, -1])];
        assert_eq!(validate_ordering(&a2, &bad), Err(Error::InvalidOrdering { index: 1 }));
        let wrong_middle = [Root(vec![1, -1, 0]), Root(vec![0, 1, -1]), Root(vec![1, 0, -1])];
        assert_eq!(validate_ordering(&a2, &wrong_middle), Err(Error::InvalidOrdering { index: 2 }));
        let c3 = rs(Family::C, 3);
        let c3_pattern: Vec<Root> = [
            [2, 0, 0], [1, 1, 0], [0, 2, 0], [-1, 1, 0], [0, 1, 1], [1, 0, 1], [0, 0, 2], [-1, 0, 1], [0, -1, 1],
        ]
        .iter()
        .map(|v| Root(v.to_vec()))
        .collect();
        assert_eq!(validate_ordering(&c3, &c3_pattern).unwrap(), w("1,2,1,2,3,2,1,2,3"));
    }

    #[test]
    fn canonical_words() {
        assert_eq!(canonical_word(Family::A, 3).unwrap(), w("1,2,1,3,2,1"));
        assert_eq!(canonical_word(Family::A, 1).unwrap(), w("1"));
        assert_eq!(canonical_word(Family::B, 2).unwrap(), w("1,2,1,2"));
        assert_eq!(canonical_word(Family::C, 3).unwrap(), w("1,2,1,2,3,2,1,2,3"));
        assert_eq!(canonical_word(Family::D, 3).unwrap(), w("1,2,3,2,1,3"));
        for (f, lo) in [(Family::A, 1), (Family::B, 1), (Family::C, 1), (Family::D, 2)] {
            for r in lo..=6 {
                let sys = rs(f, r);
                let word = canonical_word(f, r).unwrap();
                assert_eq!(word.len(), sys.num_positive());
                assert_eq!(evaluate(&sys, &word).unwrap(), longest_element(&sys), "{f}{r}");
                assert!(is_reduced(&sys, &word).unwrap());
            }
        }
    }

    #[test]
    fn reverse_and_conjugate() {
        let a2 = rs(Family::A, 2);
        let rev = word_reverse(&a2, &w("1,2,1")).unwrap();
        assert_eq!(rev, w("1,2,1"));
        assert_eq!(
            ordering_from_word(&a2, &rev).unwrap().roots,
            vec![Root(vec![1, -1, 0]), Root(vec![1, 0, -1]), Root(vec![0, 1, -1])]
        );
        let a1 = rs(Family::A, 1);
        assert_eq!(word_reverse(&a1, &w("1")).unwrap(), w("1"));
        assert!(word_reverse(&a2, &w("1,2")).is_err());

        for (f, r) in [(Family::A, 2), (Family::A, 3), (Family::B, 3), (Family::C, 2), (Family::D, 4)] {
            let sys = rs(f, r);
            let word = canonical_word(f, r).unwrap();
            let cr = word_conjugate_w0(&sys, &word).unwrap().reversed();
            let mut forward = ordering_from_word(&sys, &word).unwrap().roots;
            forward.reverse();
            assert_eq!(ordering_from_word(&sys, &cr).unwrap().roots, forward, "{f}{r}");
        }
    }

    #[test]
    fn enumeration_small_cases() {
        let a2 = rs(Family::A, 2);
        let words = enumerate_reduced_words(&a2, &longest_element(&a2), 100).unwrap();
        assert_eq!(words, vec![w("1,2,1"), w("2,1,2")]);
        let id = enumerate_reduced_words(&a2, &WeylElement::identity(3), 10).unwrap();
        assert_eq!(id, vec![Word::default()]);
        let a3 = rs(Family::A, 3);
        assert_eq!(enumerate_reduced_words(&a3, &longest_element(&a3), 100).unwrap().len(), 16);
        assert_eq!(
            enumerate_reduced_words(&a3, &longest_element(&a3), 10),
            Err(Error::Budget { budget: 10 })
        );
        assert_eq!(count_reduced_words(&a3, &longest_element(&a3)), BigUint::from(16u32));
    }

    #[test]
    fn stanley_values() {
        assert_eq!(stanley_count(2).unwrap(), BigUint::from(1u32));
        assert_eq!(stanley_count(3).unwrap(), BigUint::from(2u32));
        assert_eq!(stanley_count(5).unwrap(), BigUint::from(768u32));
        assert!(stanley_count(1).is_err());
        for n in 3..=6u64 {
            let sys = rs(Family::A, (n - 1) as usize);
            assert_eq!(count_reduced_words(&sys, &longest_element(&sys)), stanley_count(n).unwrap());
        }
    }

    #[test]
    fn printed_hyperoctahedral_formula_values() {
        assert_eq!(kraskiewicz_printed(2), BigRational::from_integer(24.into()));
        assert_eq!(kraskiewicz_printed(3), BigRational::from_integer(30240.into()));
    }

    #[test]
    fn word_parsing() {
        assert_eq!(w(" 1, 2 ,1"), Word(vec![1, 2, 1]));
        assert_eq!(w(""), Word::default());
        assert!("1,x".parse::<Word>().is_err());
        assert_eq!(w("3,2,1").to_string(), "3,2,1");
    }

    #[test]
    fn random_words_reach_the_longest_element() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for (f, r) in [(Family::A, 4), (Family::B, 3), (Family::D, 4)] {
            let rs = RootSystem::new(f, r).unwrap();
            for _ in 0..10 {
                let w = random_reduced_word(&rs, &mut rng);
                assert_eq!(w.len(), rs.num_positive());
                assert!(is_reduced(&rs, &w).unwrap());
            }
        }
    }
}
