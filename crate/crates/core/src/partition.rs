//! Full partition function `W(s, d) = sum_j W_j(s, d)` and its closed form as
//! a quasipolynomial.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::generators::GeneratorSet;
use crate::numeric::{Rational, RationalPolynomial};
use crate::waves::{
    periodic_wave_1, periodic_wave_weighted, wave_1, wave_j_weighted, weights_recursive,
    weights_recursive_with, PeriodicWave, ScalarCounter, WeightVector,
};

/// `1` together with every `j >= 2` dividing some generator, ascending.
pub fn wave_indices(d: &GeneratorSet) -> Vec<u64> {
    d.divisors()
}

/// Per-wave breakdown of one partition count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaveDecomposition {
    pub d: GeneratorSet,
    pub s: u64,
    /// `(j, W_j(s, d))` in ascending `j`.
    pub terms: Vec<(u64, Rational)>,
    pub total: BigUint,
}

fn integral_total(s: u64, terms: &[(u64, Rational)]) -> Result<BigUint> {
    let sum = terms.iter().fold(Rational::zero(), |acc, (_, v)| acc + v);
    if !sum.is_integer() || sum.is_negative() {
        return Err(Error::NonIntegralTotal { s, value: sum });
    }
    Ok(sum.to_integer().to_biguint().expect("nonnegative"))
}

/// `W(s, d)` evaluated point by point: `W_1` plus each weighted wave.
///
/// Builds weights on every call; use [`SylvesterExpansion`] for many `s`.
pub fn partition_count(d: &GeneratorSet, s: u64) -> Result<WaveDecomposition> {
    let mut terms = Vec::new();
    for j in wave_indices(d) {
        let value = if j == 1 {
            wave_1(d, s as i64)
        } else {
            let w = weights_recursive(j, d)?;
            wave_j_weighted(j, d, s as i64, &w)?
        };
        terms.push((j, value));
    }
    let total = integral_total(s, &terms)?;
    Ok(WaveDecomposition {
        d: d.clone(),
        s,
        terms,
        total,
    })
}

/// Every wave of `d` in per-residue polynomial form, built once and then
/// evaluated at any `s`.
#[derive(Clone, Debug)]
pub struct SylvesterExpansion {
    d: GeneratorSet,
    waves: Vec<PeriodicWave>,
}

impl SylvesterExpansion {
    pub fn new(d: &GeneratorSet) -> Self {
        Self::with_counter(d, ScalarCounter::Oracle)
    }

    pub fn with_counter(d: &GeneratorSet, counter: ScalarCounter) -> Self {
        Self::from_weights(d, |j| {
            weights_recursive_with(j, d, counter).expect("j divides a generator")
        })
    }

    /// Builds each wave `j >= 2` from the weights `weights(j)`.
    ///
    /// Panics if `weights(j)` does not have the shape of the weights of
    /// `(j, d)`.
    pub fn from_weights(d: &GeneratorSet, weights: impl Fn(u64) -> WeightVector) -> Self {
        let waves = wave_indices(d)
            .into_iter()
            .map(|j| {
                if j == 1 {
                    return periodic_wave_1(d);
                }
                periodic_wave_weighted(j, d, &weights(j)).expect("weights match their wave")
            })
            .collect();
        Self {
            d: d.clone(),
            waves,
        }
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.d
    }

    pub fn waves(&self) -> &[PeriodicWave] {
        &self.waves
    }

    pub fn decompose(&self, s: u64) -> Result<WaveDecomposition> {
        let terms: Vec<(u64, Rational)> = self
            .waves
            .iter()
            .map(|w| (w.j(), w.eval(s as i64)))
            .collect();
        let total = integral_total(s, &terms)?;
        Ok(WaveDecomposition {
            d: self.d.clone(),
            s,
            terms,
            total,
        })
    }

    pub fn count(&self, s: u64) -> Result<BigUint> {
        self.decompose(s).map(|dec| dec.total)
    }

    /// Sums the waves within each residue class modulo `lcm(d)`.
    pub fn quasipolynomial(&self) -> Quasipolynomial {
        let period = self.d.lcm();
        let residue_polys = (0..period)
            .map(|c| {
                self.waves
                    .iter()
                    .fold(RationalPolynomial::zero(), |acc, w| {
                        &acc + w.residue_polynomial(c as i64)
                    })
            })
            .collect();
        Quasipolynomial {
            d: self.d.clone(),
            period,
            residue_polys,
        }
    }
}

/// `W(s, d)` as one polynomial per residue class `s mod period`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quasipolynomial {
    pub d: GeneratorSet,
    pub period: u64,
    /// Indexed by `s mod period`; coefficients lowest degree first.
    pub residue_polys: Vec<RationalPolynomial>,
}

impl Quasipolynomial {
    pub fn polynomial_for(&self, s: u64) -> &RationalPolynomial {
        &self.residue_polys[(s % self.period) as usize]
    }

    pub fn eval(&self, s: u64) -> Rational {
        self.polynomial_for(s)
            .eval(&Rational::from_integer(BigInt::from(s)))
    }
}

pub fn quasipolynomial(d: &GeneratorSet) -> Quasipolynomial {
    SylvesterExpansion::new(d).quasipolynomial()
}
