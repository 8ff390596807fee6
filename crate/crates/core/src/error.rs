use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid super rank M={m}, N={n}: need 0 <= M < N")]
    InvalidRank { m: usize, n: usize },

    #[error("modulus {0} is neither 0 nor prime")]
    NonPrimeModulus(u32),

    #[error("this check requires a prime modulus, got p=0")]
    PrimeRequired,

    #[error("weight has shape ({got_m}|{got_n}), expected ({m}|{n})")]
    DimensionMismatch {
        m: usize,
        n: usize,
        got_m: usize,
        got_n: usize,
    },

    #[error("invalid Borel word: {0}")]
    InvalidPermutation(String),

    #[error("invalid step order: {0}")]
    InvalidOrder(String),

    #[error("more than {cap} linear extensions")]
    Capacity { cap: usize },

    #[error("box [{lo},{hi}] in dimension {dim} has {size} points, over the limit {limit}")]
    LimitExceeded {
        lo: i64,
        hi: i64,
        dim: usize,
        size: u128,
        limit: u128,
    },

    #[error("malformed box: {0}")]
    InvalidBox(String),

    #[error("integer overflow while applying a step")]
    Overflow,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
