//! Super rank, weight lattice elements and the modulus that selects the
//! congruence test.
//!
//! A weight of `GL(M|N)` is a pair `(lambda, theta)` with `lambda` in `Z^M`
//! (coordinates along the even basis vectors) and `theta` in `Z^N` (odd
//! basis vectors). The modulus `p` is either `0`, meaning exact equality
//! (the generic-q regime), or a prime, meaning comparison mod `p`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numbers of even (`m`) and odd (`n`) basis vectors, with `m < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperRank {
    m: usize,
    n: usize,
}

impl SuperRank {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m >= n {
            return Err(Error::InvalidRank { m, n });
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of coordinates, `M + N`.
    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Number of steps of the algorithm, `M(M+1)/2`.
    pub fn step_count(&self) -> usize {
        self.m * (self.m + 1) / 2
    }
}

impl fmt::Display for SuperRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GL({}|{})", self.m, self.n)
    }
}

/// `0` for the generic-q regime, otherwise a prime `p` with `q^p = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Modulus(u32);

impl Modulus {
    pub const GENERIC: Modulus = Modulus(0);

    pub fn new(p: u32) -> Result<Self> {
        if p == 0 || is_prime(p) {
            Ok(Self(p))
        } else {
            Err(Error::NonPrimeModulus(p))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_generic(self) -> bool {
        self.0 == 0
    }

    /// Whether `a` vanishes: exactly for `p = 0`, modulo `p` otherwise.
    pub fn divides(self, a: i128) -> bool {
        congruent_zero(a, self)
    }
}

impl TryFrom<u32> for Modulus {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        Modulus::new(p)
    }
}

impl From<Modulus> for u32 {
    fn from(p: Modulus) -> u32 {
        p.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}", self.0)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = u64::from(p);
    (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `a = 0` when `p = 0`, `a ≡ 0 (mod p)` otherwise. Negative `a` uses the
/// nonnegative remainder.
pub fn congruent_zero(a: i128, p: Modulus) -> bool {
    match p.0 {
        0 => a == 0,
        p => a.rem_euclid(i128::from(p)) == 0,
    }
}

/// An integral weight `(lambda, theta)`.
///
/// The derived ordering is lexicographic on `lambda` and then `theta`,
/// which is the order the verification harness sorts counterexamples by.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Weight {
    pub lambda: Vec<i64>,
    pub theta: Vec<i64>,
}

impl Weight {
    pub fn new(lambda: Vec<i64>, theta: Vec<i64>) -> Self {
        Self { lambda, theta }
    }

    /// Splits a flat coordinate vector `(lambda_1..lambda_M, theta_1..theta_N)`.
    pub fn from_flat(rank: &SuperRank, coords: &[i64]) -> Result<Self> {
        if coords.len() != rank.dim() {
            return Err(Error::DimensionMismatch {
                m: rank.m(),
                n: rank.n(),
                got_m: coords.len().min(rank.m()),
                got_n: coords.len().saturating_sub(rank.m()),
            });
        }
        let (lambda, theta) = coords.split_at(rank.m());
        Ok(Self::new(lambda.to_vec(), theta.to_vec()))
    }

    pub fn to_flat(&self) -> Vec<i64> {
        self.lambda.iter().chain(&self.theta).copied().collect()
    }

    pub fn check(&self, rank: &SuperRank) -> Result<()> {
        if self.lambda.len() != rank.m() || self.theta.len() != rank.n() {
            return Err(Error::DimensionMismatch {
                m: rank.m(),
                n: rank.n(),
                got_m: self.lambda.len(),
                got_n: self.theta.len(),
            });
        }
        Ok(())
    }

    /// Entrywise negation (saturating at `i64::MIN`).
    pub fn negated(&self) -> Self {
        Self {
            lambda: self.lambda.iter().map(|x| x.saturating_neg()).collect(),
            theta: self.theta.iter().map(|x| x.saturating_neg()).collect(),
        }
    }

    /// Sum of all coordinates, computed without overflow.
    pub fn total(&self) -> i128 {
        self.lambda
            .iter()
            .chain(&self.theta)
            .map(|&x| i128::from(x))
            .sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.lambda, self.theta)
    }
}

/// `theta` split into the first `M+1` entries and the remaining `N-M-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaSplit {
    pub head: Vec<i64>,
    pub tail: Vec<i64>,
}

impl ThetaSplit {
    pub fn rejoin(&self) -> Vec<i64> {
        self.head.iter().chain(&self.tail).copied().collect()
    }
}

pub fn split_theta(w: &Weight, rank: &SuperRank) -> Result<ThetaSplit> {
    w.check(rank)?;
    let (head, tail) = w.theta.split_at(rank.m() + 1);
    Ok(ThetaSplit {
        head: head.to_vec(),
        tail: tail.to_vec(),
    })
}
