//! Borel words, positive roots, and the excess set `Φ⁺_st \ Φ⁺_m`.
//!
//! Indices are 1-based throughout, matching the basis `v_1 .. v_{M+N}` in
//! which `v_1..v_M` are even and `v_{M+1}..v_{M+N}` are odd.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::SuperRank;

/// A permutation `ω` of `1..=M+N`; position `k` holds the index of the
/// `k`-th vector of the flag `Fl_ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BorelWord(Vec<usize>);

impl BorelWord {
    pub fn new(word: Vec<usize>, rank: &SuperRank) -> Result<Self> {
        let d = rank.dim();
        if word.len() != d {
            return Err(Error::InvalidPermutation(format!(
                "length {} but M+N = {d}",
                word.len()
            )));
        }
        let mut seen = vec![false; d + 1];
        for &x in &word {
            if x == 0 || x > d {
                return Err(Error::InvalidPermutation(format!(
                    "entry {x} outside 1..={d}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("entry {x} repeated")));
            }
        }
        Ok(Self(word))
    }

    /// The standard flag: all even vectors, then all odd ones.
    pub fn identity(rank: &SuperRank) -> Self {
        Self((1..=rank.dim()).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// The word of the mixed flag `v_{M+1}, v_1, v_{M+2}, v_2, …`: odd and even
/// indices alternate until the even ones run out, then the remaining odd
/// indices follow in increasing order.
pub fn mixed_word(rank: &SuperRank) -> BorelWord {
    let m = rank.m();
    let mut word = Vec::with_capacity(rank.dim());
    for k in 1..=m {
        word.push(m + k);
        word.push(k);
    }
    word.extend(2 * m + 1..=rank.dim());
    BorelWord(word)
}

/// The root `ε_a − ε_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub a: usize,
    pub b: usize,
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ε{}−ε{}", self.a, self.b)
    }
}

/// `Φ⁺_ω = { ε_ω(i) − ε_ω(j) : i < j }`.
pub fn positive_roots(omega: &BorelWord, rank: &SuperRank) -> Result<BTreeSet<Root>> {
    // Re-validate: a word built for one rank must not be used with another.
    let w = BorelWord::new(omega.0.clone(), rank)?;
    let w = w.as_slice();
    let mut roots = BTreeSet::new();
    for (i, &a) in w.iter().enumerate() {
        for &b in &w[i + 1..] {
            roots.insert(Root { a, b });
        }
    }
    Ok(roots)
}

/// An element of the excess set, standing for the root `ε_i − ε_{M+j}`.
///
/// The derived ordering (by `i`, then `j`) is only used for deterministic
/// output; the structural order is [`pair_leq`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairIndex {
    pub i: usize,
    pub j: usize,
}

impl PairIndex {
    pub const fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    pub fn is_valid_for(&self, m: usize) -> bool {
        1 <= self.j && self.j <= self.i && self.i <= m
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

// Serialized as a bare `[i, j]` array.
impl Serialize for PairIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.i, self.j].serialize(s)
    }
}

impl<'de> Deserialize<'de> for PairIndex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [i, j] = <[usize; 2]>::deserialize(d)?;
        Ok(Self { i, j })
    }
}

/// The closed form `{ (i,j) : 1 ≤ j ≤ i ≤ M }`, sorted by `(i, j)`.
pub fn pair_set(m: usize) -> Vec<PairIndex> {
    (1..=m)
        .flat_map(|i| (1..=i).map(move |j| PairIndex::new(i, j)))
        .collect()
}

/// `Φ⁺_st \ Φ⁺_m` computed as a set difference and translated into
/// `(i, j)` coordinates, sorted by `(i, j)`.
///
/// Fails with [`Error::Internal`] if some root in the difference is not of
/// the form `ε_i − ε_{M+j}` with `j ≤ i`.
pub fn excess_pairs(rank: &SuperRank) -> Result<Vec<PairIndex>> {
    let standard = positive_roots(&BorelWord::identity(rank), rank)?;
    let mixed = positive_roots(&mixed_word(rank), rank)?;
    let m = rank.m();
    standard
        .difference(&mixed)
        .map(|root| {
            if root.a > m || root.b <= m {
                return Err(Error::Internal(format!(
                    "excess root {root} is not even-minus-odd"
                )));
            }
            let pair = PairIndex::new(root.a, root.b - m);
            if !pair.is_valid_for(m) {
                return Err(Error::Internal(format!(
                    "excess root {root} maps to {pair}, outside j <= i <= M"
                )));
            }
            Ok(pair)
        })
        .collect::<Result<BTreeSet<_>>>()
        .map(|s| s.into_iter().collect())
}

/// `x ≼ y` iff `i_x ≥ i_y` and `j_x ≤ j_y`.
pub fn pair_leq(x: PairIndex, y: PairIndex) -> bool {
    x.i >= y.i && x.j <= y.j
}

/// Cover relations `x ⋖ y` of [`pair_leq`] on the pairs for `m`.
pub fn hasse_covers(m: usize) -> Vec<(PairIndex, PairIndex)> {
    let pairs = pair_set(m);
    let lt = |x: PairIndex, y: PairIndex| x != y && pair_leq(x, y);
    let mut covers = Vec::new();
    for &x in &pairs {
        for &y in &pairs {
            if lt(x, y) && !pairs.iter().any(|&z| lt(x, z) && lt(z, y)) {
                covers.push((x, y));
            }
        }
    }
    covers
}
