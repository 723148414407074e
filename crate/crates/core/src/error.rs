use thiserror::Error;

use crate::rational::ExtRational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The slope is 0/1 or 1/0 where an interior slope is required.
    #[error("slope {0} is a boundary slope; an interior slope 0 < t < oo is required")]
    BoundarySlope(ExtRational),

    #[error("slope {0} is 1/1, which has no Cohn substitution regime")]
    CentralSlope(ExtRational),

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("invalid word {0:?}")]
    InvalidWord(String),

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{what} {requested} exceeds the limit {limit}")]
    ResourceLimit {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: u64, max: u64 },

    #[error("word {0} has no symmetric decomposition u a u^-1")]
    NoSymmetricDecomposition(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("inexact division: {0}")]
    Integrality(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}
