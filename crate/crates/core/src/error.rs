use thiserror::Error;

use crate::numeric::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator set must contain at least one part")]
    EmptyGeneratorSet,
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),
    #[error("period must be positive, got {0}")]
    InvalidPeriod(i64),
    #[error("wave index must be at least 2, got {0}")]
    WaveIndexTooSmall(u64),
    #[error("{j} divides none of the generators {parts:?}")]
    NotAWaveIndex { j: u64, parts: Vec<u64> },
    #[error("weights were computed for j={found_j} (l_max={found_l_max}), expected j={j} (l_max={l_max})")]
    WeightMismatch {
        j: u64,
        l_max: u64,
        found_j: u64,
        found_l_max: u64,
    },
    #[error("partition count is only defined for s >= 0, got {0}")]
    NegativeArgument(i64),
    #[error("wave sum at s={s} is not a nonnegative integer: {value}")]
    NonIntegralTotal { s: u64, value: Rational },
    #[error("every generator is divisible by {j}; no free variables")]
    NoFreeGenerators { j: u64 },
    #[error("system has {rows} rows and {cols} columns, expected 1 + n rows and 2n columns")]
    MalformedSystem { rows: usize, cols: usize },
}
