use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid mask {input:?}: {reason}")]
    InvalidMask { input: String, reason: &'static str },

    #[error("weight index j = {j} is undefined; j must be at least 2")]
    WeightIndex { j: u64 },

    #[error("n must be at least {min}, got {n}")]
    RowIndex { n: usize, min: usize },

    #[error(
        "explicit combination sum is oracle-scale only: n = {n} exceeds the subset limit {limit}"
    )]
    SubsetLimit { n: usize, limit: usize },

    #[error("internal inconsistency: explicit sum for (n = {n}, m = {m}) is not an integer")]
    NonIntegral { n: usize, m: i64 },

    #[error("not a permutation of 1..{n}: {detail}")]
    NotAPermutation { n: usize, detail: String },

    #[error("brute-force optimization set search limited to {limit} points, got {len}")]
    PointLimit { len: usize, limit: usize },

    #[error("exhaustive enumeration needs {required} tuples, over the budget of {budget}")]
    BudgetExceeded { required: String, budget: u64 },

    #[error("tail threshold requires c_0 = {expected}; use {use_instead} for this mask")]
    TailBranch {
        expected: u8,
        use_instead: &'static str,
    },

    #[error("M1 must be a positive integer")]
    TailOffset,

    #[error("malformed table: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
