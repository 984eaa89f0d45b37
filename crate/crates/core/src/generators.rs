//! The multiset of allowed summands.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Multiset `{d_1, ..., d_m}` of positive generators together with its sum
/// and product.
///
/// Order is kept as given; repeated parts are meaningful.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    parts: Vec<u64>,
    sum: u64,
    product: BigUint,
}

impl GeneratorSet {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        if parts.contains(&0) {
            return Err(Error::NonPositiveGenerator(0));
        }
        let sum = parts.iter().sum();
        let product = parts
            .iter()
            .fold(BigUint::one(), |acc, &d| acc * BigUint::from(d));
        Ok(Self {
            parts,
            sum,
            product,
        })
    }

    /// Accepts signed input, rejecting anything below 1.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let parts = parts
            .iter()
            .map(|&d| u64::try_from(d).map_err(|_| Error::NonPositiveGenerator(d)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of generators `m`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `s_m`, the sum of all generators.
    pub fn sum(&self) -> u64 {
        self.sum
    }

    /// `pi_m`, the product of all generators.
    pub fn product(&self) -> &BigUint {
        &self.product
    }

    /// Whether `j` divides at least one generator.
    pub fn has_multiple_of(&self, j: u64) -> bool {
        j != 0 && self.parts.iter().any(|d| d % j == 0)
    }

    /// Every positive divisor of every generator, ascending, without
    /// repeats.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .parts
            .iter()
            .flat_map(|&d| (1..=d).filter(move |j| d % j == 0))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Least common multiple of the generators.
    pub fn lcm(&self) -> u64 {
        self.parts
            .iter()
            .fold(1, |acc, &d| num_integer::lcm(acc, d))
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}
