//! Membership predicates for the standard-dominant set, the mixed-Borel
//! highest weights, and relevant orbits, plus orbit representatives.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weight::{congruent_zero, split_theta, Modulus, SuperRank, Weight};

/// Which unipotent subgroup the orbits are taken for. `UMinus` is the
/// lower-triangular `U⁻_{M,N}`; `UPlus` is its transpose `U_{M,N}`, for which
/// every chain inequality is reversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupConvention {
    UMinus,
    UPlus,
}

impl GroupConvention {
    fn chain_holds(self, xs: impl IntoIterator<Item = i64>) -> bool {
        let mut xs = xs.into_iter();
        let Some(mut prev) = xs.next() else {
            return true;
        };
        for x in xs {
            let ok = match self {
                GroupConvention::UMinus => prev <= x,
                GroupConvention::UPlus => prev >= x,
            };
            if !ok {
                return false;
            }
            prev = x;
        }
        true
    }
}

fn non_increasing(xs: &[i64]) -> bool {
    xs.windows(2).all(|w| w[0] >= w[1])
}

/// Condition B: whenever `θ_i = θ_{i+1}` (`i = 1..M`) or `λ_{i-1} = λ_i`
/// (`i = 2..M`), the diagonal sum `λ_i + θ_i` must vanish.
///
/// Expects `lambda.len() = M` and `theta.len() ≥ M + 1`.
pub fn condition_b(lambda: &[i64], theta: &[i64], p: Modulus) -> bool {
    let m = lambda.len();
    let diag_vanishes = |i: usize| congruent_zero(i128::from(lambda[i]) + i128::from(theta[i]), p);
    // 0-based: theta[k] == theta[k+1] for k in 0..m; lambda[k-1] == lambda[k] for k in 1..m.
    (0..m).all(|k| theta[k] != theta[k + 1] || diag_vanishes(k))
        && (1..m).all(|k| lambda[k - 1] != lambda[k] || diag_vanishes(k))
}

/// `λ_1 ≥ … ≥ λ_M` and `θ_1 ≥ … ≥ θ_N`.
pub fn is_standard_dominant(w: &Weight, rank: &SuperRank) -> Result<bool> {
    w.check(rank)?;
    Ok(non_increasing(&w.lambda) && non_increasing(&w.theta))
}

/// Highest weights of irreducible `GL(M|N)` modules in characteristic `p`
/// with respect to the mixed Borel: standard-dominant plus condition B.
pub fn is_mixed_highest_weight(w: &Weight, rank: &SuperRank, p: Modulus) -> Result<bool> {
    Ok(is_standard_dominant(w, rank)? && condition_b(&w.lambda, &w.theta, p))
}

/// Whether the orbit labelled by `w = (λ, (θ, θ'))` is relevant.
///
/// Condition A runs along `λ` and along `θ_1 … θ_{M+1}, θ'_1 … θ'_{N-M-1}`
/// in the direction fixed by `g`; condition B is [`condition_b`].
pub fn is_relevant_orbit(
    w: &Weight,
    rank: &SuperRank,
    p: Modulus,
    g: GroupConvention,
) -> Result<bool> {
    let split = split_theta(w, rank)?;
    let chains = g.chain_holds(w.lambda.iter().copied())
        && g.chain_holds(split.head.iter().chain(&split.tail).copied());
    Ok(chains && condition_b(&w.lambda, &split.head, p))
}

/// The orbit representative `𝕃_{(λ,(θ,θ'))}` as a sparse matrix of
/// exponents of `t`. Cells are 1-based `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitMatrix {
    size: usize,
    entries: BTreeMap<(usize, usize), i64>,
}

impl OrbitMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> Option<i64> {
        self.entries.get(&(row, col)).copied()
    }

    /// Structural cells as `(row, col, exponent)`, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries.iter().map(|(&(r, c), &e)| (r, c, e))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }
}

impl Serialize for OrbitMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<[i64; 3]> = self
            .entries()
            .map(|(r, c, e)| [r as i64, c as i64, e])
            .collect();
        let mut st = s.serialize_struct("OrbitMatrix", 2)?;
        st.serialize_field("size", &self.size)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

pub fn orbit_representative(w: &Weight, rank: &SuperRank) -> Result<OrbitMatrix> {
    let split = split_theta(w, rank)?;
    let m = rank.m();
    let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow);
    let mut entries = BTreeMap::new();
    for i in 0..m {
        let e = w.lambda[i]
            .checked_add(split.head[i])
            .and_then(i64::checked_neg)
            .ok_or(Error::Overflow)?;
        entries.insert((i + 1, i + 1), e);
    }
    for (c, &t) in split.head.iter().enumerate() {
        entries.insert((m + 1, c + 1), neg(t)?);
    }
    for (r, &t) in split.tail.iter().enumerate() {
        let d = m + 2 + r;
        entries.insert((d, d), neg(t)?);
    }
    Ok(OrbitMatrix {
        size: rank.n(),
        entries,
    })
}
