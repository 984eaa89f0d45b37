//! Exact restricted partition counts `W(s, d)` through Sylvester's wave
//! decomposition.
//!
//! `W(s, d)` counts the ways to write `s` as a nonnegative integer
//! combination of the generators `d_1..d_m`. It splits into waves `W_j`, one
//! for each divisor `j` of the generators. `W_1` is a polynomial given by a
//! higher-order Bernoulli polynomial. Every other wave is a weighted sum of
//! polynomial parts modulated by the prime circulator `Psi_j`. All arithmetic
//! is exact.
//!
//! ```
//! use sylvester_core::{partition_count, GeneratorSet};
//!
//! let d = GeneratorSet::new(vec![1, 2, 3]).unwrap();
//! assert_eq!(partition_count(&d, 5).unwrap().total, 5u32.into());
//! ```

pub mod bernoulli;
pub mod circulator;
mod error;
pub mod generators;
pub mod numeric;
pub mod oracle;
pub mod partition;
pub mod report;
pub mod verify;
pub mod waves;

pub use error::{Error, Result};
pub use generators::GeneratorSet;
pub use numeric::{Rational, RationalPolynomial, TruncatedSeries};
pub use partition::{
    partition_count, quasipolynomial, wave_indices, Quasipolynomial, SylvesterExpansion,
    WaveDecomposition,
};
pub use waves::{
    split_generators, wave_1, wave_j_direct, wave_j_weighted, weights_bruteforce,
    weights_recursive, ModifiedSet, PeriodicWave, ScalarCounter, WeightVector,
};
