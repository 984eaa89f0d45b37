//! Sylvester waves `W_j(s, d)`.
//!
//! `W_1` is the polynomial part. For `j >= 2` the wave is built from the
//! modified set `d_j`, where generators divisible by `j` are kept and every
//! other generator is multiplied by `j`. It can be evaluated in two ways:
//!
//! * directly, as a sum over all `r in [0, j-1]^(m-k_j)` of shifted
//!   higher-order Bernoulli polynomials times `Psi_j` ([`wave_j_direct`]);
//! * as `sum_l A_l W_1(s - l, d_j) Psi_j(s - l)` with integer weights `A_l`
//!   ([`wave_j_weighted`]).
//!
//! The weights count bounded vectors `r` with `r . d' = l` over the
//! nondivisible generators `d'`. [`weights_bruteforce`] enumerates them;
//! [`weights_recursive`] expresses each `A_l` as an alternating sum of scalar
//! partition counts over `d'`.
//!
//! Within a residue class of `s` modulo `j` each wave is a single polynomial;
//! [`PeriodicWave`] holds those polynomials.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::bernoulli::{hob_eval, hob_polynomial};
use crate::circulator::{residue, Circulator};
use crate::error::{Error, Result};
use crate::generators::GeneratorSet;
use crate::numeric::{factorial, Rational, RationalPolynomial};
use crate::oracle::partition_table;
use crate::partition::SylvesterExpansion;

/// `d` split by divisibility by `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModifiedSet {
    pub j: u64,
    /// Generators divisible by `j`, original values.
    pub divisible: Vec<u64>,
    /// Generators not divisible by `j`, original values.
    pub nondivisible: Vec<u64>,
    /// `j` times each nondivisible generator.
    pub scaled: Vec<u64>,
    /// `divisible` followed by `scaled`.
    pub combined: GeneratorSet,
}

impl ModifiedSet {
    /// `k_j`.
    pub fn k(&self) -> usize {
        self.divisible.len()
    }

    /// Number of free coordinates `m - k_j`.
    pub fn free_count(&self) -> usize {
        self.nondivisible.len()
    }

    /// `(j - 1) * sum(nondivisible)`.
    pub fn l_max(&self) -> u64 {
        (self.j - 1) * self.nondivisible.iter().sum::<u64>()
    }
}

pub fn split_generators(j: u64, d: &GeneratorSet) -> Result<ModifiedSet> {
    if j == 0 {
        return Err(Error::InvalidPeriod(0));
    }
    let (divisible, nondivisible): (Vec<u64>, Vec<u64>) =
        d.parts().iter().partition(|&&x| x % j == 0);
    let scaled: Vec<u64> = nondivisible.iter().map(|x| x * j).collect();
    let combined = GeneratorSet::new(divisible.iter().chain(&scaled).copied().collect())?;
    Ok(ModifiedSet {
        j,
        divisible,
        nondivisible,
        scaled,
        combined,
    })
}

/// `1 / ((m-1)! pi_m)` for the given set.
fn normalizer(d: &GeneratorSet) -> Rational {
    let denom = factorial(d.len() as u64 - 1) * BigInt::from(d.product().clone());
    Rational::new(BigInt::one(), denom)
}

/// `W_1(s, d)` as a polynomial in `s`, of degree `m - 1`.
pub fn polynomial_part(d: &GeneratorSet) -> RationalPolynomial {
    hob_polynomial(d.len() - 1, d)
        .shift(&Rational::from_integer(BigInt::from(d.sum())))
        .scale(&normalizer(d))
}

/// `W_1(s, d) = B^(m)_{m-1}(s + s_m, d) / ((m-1)! pi_m)`.
pub fn wave_1(d: &GeneratorSet, s: i64) -> Rational {
    let arg = Rational::from_integer(BigInt::from(s) + BigInt::from(d.sum()));
    hob_eval(d.len() - 1, d, &arg) * normalizer(d)
}

fn check_wave_index(j: u64, d: &GeneratorSet) -> Result<()> {
    if j < 2 {
        return Err(Error::WaveIndexTooSmall(j));
    }
    if !d.has_multiple_of(j) {
        return Err(Error::NotAWaveIndex {
            j,
            parts: d.parts().to_vec(),
        });
    }
    Ok(())
}

/// Calls `f(r . free)` for every `r in [0, j-1]^len(free)`, in odometer order.
fn for_each_offset(j: u64, free: &[u64], mut f: impl FnMut(u64)) {
    let mut r = vec![0u64; free.len()];
    loop {
        f(r.iter().zip(free).map(|(a, b)| a * b).sum());
        let mut i = 0;
        loop {
            if i == r.len() {
                return;
            }
            r[i] += 1;
            if r[i] < j {
                break;
            }
            r[i] = 0;
            i += 1;
        }
    }
}

/// `j^(k_j - m) / ((m-1)! pi_m)`, with `pi_m` over the original set.
fn direct_prefactor(split: &ModifiedSet, d: &GeneratorSet) -> Rational {
    let jpow = BigInt::from(split.j).pow(split.free_count() as u32);
    normalizer(d) / Rational::from_integer(jpow)
}

/// `W_j(s, d)` by summing over every `r in [0, j-1]^(m - k_j)`.
pub fn wave_j_direct(j: u64, d: &GeneratorSet, s: i64) -> Result<Rational> {
    check_wave_index(j, d)?;
    let split = split_generators(j, d)?;
    let bernoulli = hob_polynomial(d.len() - 1, &split.combined);
    let psi = Circulator::new(j)?;
    let base = s as i128 + d.sum() as i128;
    let mut acc = Rational::zero();
    for_each_offset(j, &split.nondivisible, |offset| {
        let arg = base + offset as i128;
        let c = psi.at(arg);
        if c != 0 {
            let value = bernoulli.eval(&Rational::from_integer(BigInt::from(arg)));
            acc += value * Rational::from_integer(BigInt::from(c));
        }
    });
    Ok(acc * direct_prefactor(&split, d))
}

/// Integer weights `A_0..=A_{l_max}` for one `(j, d)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub j: u64,
    pub l_max: u64,
    pub weights: Vec<BigUint>,
}

impl WeightVector {
    fn trivial(j: u64) -> Self {
        Self {
            j,
            l_max: 0,
            weights: vec![BigUint::one()],
        }
    }

    /// `A_l`, zero outside `0..=l_max`.
    pub fn get(&self, l: u64) -> BigUint {
        self.weights
            .get(l as usize)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn total(&self) -> BigUint {
        self.weights.iter().sum()
    }
}

/// Where [`weights_recursive_with`] takes its scalar partition counts from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ScalarCounter {
    /// The dynamic-programming table in [`crate::oracle`].
    #[default]
    Oracle,
    /// Sylvester waves on the smaller generator set, recursively.
    Waves,
}

/// `A_l` by enumerating all `j^(m - k_j)` bounded vectors.
pub fn weights_bruteforce(j: u64, d: &GeneratorSet) -> Result<WeightVector> {
    if j < 2 {
        return Err(Error::WaveIndexTooSmall(j));
    }
    let split = split_generators(j, d)?;
    if split.free_count() == 0 {
        return Ok(WeightVector::trivial(j));
    }
    let l_max = split.l_max();
    let mut counts = vec![0u64; l_max as usize + 1];
    for_each_offset(j, &split.nondivisible, |l| counts[l as usize] += 1);
    Ok(WeightVector {
        j,
        l_max,
        weights: counts.into_iter().map(BigUint::from).collect(),
    })
}

/// `A_l` as an alternating sum of scalar partitions, using the DP oracle.
pub fn weights_recursive(j: u64, d: &GeneratorSet) -> Result<WeightVector> {
    weights_recursive_with(j, d, ScalarCounter::Oracle)
}

/// `A_l = sum_p (-1)^popcount(p) W(l - j v_p . d', d')`, where `v_p` runs over
/// the binary digit vectors of `p < 2^(m - k_j)`.
pub fn weights_recursive_with(
    j: u64,
    d: &GeneratorSet,
    counter: ScalarCounter,
) -> Result<WeightVector> {
    alternating_weights(j, d, counter, true)
}

/// Same as [`weights_recursive`] but with every sign forced to `+`.
/// Negative control for the verification suites.
pub(crate) fn weights_recursive_unsigned(j: u64, d: &GeneratorSet) -> Result<WeightVector> {
    alternating_weights(j, d, ScalarCounter::Oracle, false)
}

fn alternating_weights(
    j: u64,
    d: &GeneratorSet,
    counter: ScalarCounter,
    signed: bool,
) -> Result<WeightVector> {
    if j < 2 {
        return Err(Error::WaveIndexTooSmall(j));
    }
    let split = split_generators(j, d)?;
    if split.free_count() == 0 {
        return Ok(WeightVector::trivial(j));
    }
    let free = &split.nondivisible;
    let l_max = split.l_max();
    let table: Vec<BigInt> = match counter {
        ScalarCounter::Oracle => partition_table(free, l_max)
            .into_iter()
            .map(BigInt::from)
            .collect(),
        ScalarCounter::Waves => {
            let sub = GeneratorSet::new(free.clone())?;
            let expansion = SylvesterExpansion::with_counter(&sub, ScalarCounter::Waves);
            (0..=l_max)
                .map(|s| expansion.count(s).map(BigInt::from))
                .collect::<Result<_>>()?
        }
    };
    let n = free.len();
    let mut weights = Vec::with_capacity(l_max as usize + 1);
    for l in 0..=l_max {
        let mut acc = BigInt::zero();
        for p in 0u64..(1 << n) {
            let dot: u64 = (0..n).filter(|i| p >> i & 1 == 1).map(|i| free[i]).sum();
            let shift = j * dot;
            if shift > l {
                continue;
            }
            let term = &table[(l - shift) as usize];
            if signed && p.count_ones() % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        let weight = acc
            .to_biguint()
            .unwrap_or_else(|| panic!("negative weight A_{l} for j={j}, d={d}"));
        weights.push(weight);
    }
    Ok(WeightVector { j, l_max, weights })
}

fn check_weights(split: &ModifiedSet, w: &WeightVector) -> Result<()> {
    let expected_l_max = split.l_max();
    if w.j != split.j || w.l_max != expected_l_max || w.weights.len() as u64 != w.l_max + 1 {
        return Err(Error::WeightMismatch {
            j: split.j,
            l_max: expected_l_max,
            found_j: w.j,
            found_l_max: w.l_max,
        });
    }
    Ok(())
}

/// `W_j(s, d) = sum_l A_l W_1(s - l, d_j) Psi_j(s - l)`.
pub fn wave_j_weighted(j: u64, d: &GeneratorSet, s: i64, w: &WeightVector) -> Result<Rational> {
    check_wave_index(j, d)?;
    let split = split_generators(j, d)?;
    check_weights(&split, w)?;
    let (num, den) = polynomial_part(&split.combined).clear_denominators();
    let psi = Circulator::new(j)?;
    let mut acc = BigInt::zero();
    for (l, a) in w.weights.iter().enumerate() {
        let arg = s as i128 - l as i128;
        let c = psi.at(arg);
        if c == 0 || a.is_zero() {
            continue;
        }
        let x = BigInt::from(arg);
        let value = num.iter().rev().fold(BigInt::zero(), |v, k| v * &x + k);
        acc += value * BigInt::from(a.clone()) * c;
    }
    Ok(Rational::new(acc, den))
}

/// One wave as `j` polynomials in `s`, one per residue class `s mod j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicWave {
    j: u64,
    residues: Vec<RationalPolynomial>,
}

impl PeriodicWave {
    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn residues(&self) -> &[RationalPolynomial] {
        &self.residues
    }

    pub fn residue_polynomial(&self, s: i64) -> &RationalPolynomial {
        &self.residues[residue(s as i128, self.j) as usize]
    }

    pub fn eval(&self, s: i64) -> Rational {
        self.residue_polynomial(s)
            .eval(&Rational::from_integer(BigInt::from(s)))
    }
}

/// `W_1` as a period-1 wave.
pub fn periodic_wave_1(d: &GeneratorSet) -> PeriodicWave {
    PeriodicWave {
        j: 1,
        residues: vec![polynomial_part(d)],
    }
}

/// Per-residue polynomials `sum_e Psi_j(arg(c, e)) bucket_e` for each
/// `c in 0..j`.
fn fold_buckets(
    psi: &Circulator,
    buckets: &[RationalPolynomial],
    arg: impl Fn(u64, u64) -> i128,
) -> Vec<RationalPolynomial> {
    let j = psi.period();
    (0..j)
        .map(|c| {
            let mut poly = RationalPolynomial::zero();
            for (e, bucket) in buckets.iter().enumerate() {
                let k = psi.at(arg(c, e as u64));
                if k != 0 {
                    poly.add_scaled(bucket, &Rational::from_integer(BigInt::from(k)));
                }
            }
            poly
        })
        .collect()
}

/// Symbolic form of [`wave_j_weighted`].
pub fn periodic_wave_weighted(j: u64, d: &GeneratorSet, w: &WeightVector) -> Result<PeriodicWave> {
    check_wave_index(j, d)?;
    let split = split_generators(j, d)?;
    check_weights(&split, w)?;
    let part = polynomial_part(&split.combined);
    let psi = Circulator::new(j)?;
    // bucket[e] = sum_{l = e mod j} A_l W_1(s - l, d_j)
    let mut buckets = vec![RationalPolynomial::zero(); j as usize];
    for (l, a) in w.weights.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let shifted = part.shift(&Rational::from_integer(-BigInt::from(l)));
        let a = Rational::from_integer(BigInt::from(a.clone()));
        buckets[l % j as usize].add_scaled(&shifted, &a);
    }
    let residues = fold_buckets(&psi, &buckets, |c, e| c as i128 - e as i128);
    Ok(PeriodicWave { j, residues })
}

/// Symbolic form of [`wave_j_direct`]; every `r` vector is visited.
pub fn periodic_wave_direct(j: u64, d: &GeneratorSet) -> Result<PeriodicWave> {
    check_wave_index(j, d)?;
    let split = split_generators(j, d)?;
    let bernoulli = hob_polynomial(d.len() - 1, &split.combined);
    let psi = Circulator::new(j)?;
    let mut shifted: HashMap<u64, RationalPolynomial> = HashMap::new();
    // bucket[e] = sum over r with (s_m + r.d') = e mod j of B(s + s_m + r.d')
    let mut buckets = vec![RationalPolynomial::zero(); j as usize];
    let one = Rational::one();
    for_each_offset(j, &split.nondivisible, |offset| {
        let total = d.sum() + offset;
        let poly = shifted
            .entry(total)
            .or_insert_with(|| bernoulli.shift(&Rational::from_integer(BigInt::from(total))));
        buckets[(total % j) as usize].add_scaled(poly, &one);
    });
    let prefactor = direct_prefactor(&split, d);
    let residues = fold_buckets(&psi, &buckets, |c, e| c as i128 + e as i128)
        .into_iter()
        .map(|p| p.scale(&prefactor))
        .collect();
    Ok(PeriodicWave { j, residues })
}

/// Length matches `l_max` and `A_{l_max}` is attained.
pub fn weights_well_formed(w: &WeightVector) -> bool {
    w.weights.len() as u64 == w.l_max + 1 && w.weights.last().is_some_and(|a| !a.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{ratio, rational};

    fn set(p: &[u64]) -> GeneratorSet {
        GeneratorSet::new(p.to_vec()).unwrap()
    }

    fn uints(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn split_examples() {
        let m = split_generators(2, &set(&[1, 2])).unwrap();
        assert_eq!(m.divisible, vec![2]);
        assert_eq!(m.nondivisible, vec![1]);
        assert_eq!(m.combined.parts(), &[2, 2]);

        let m = split_generators(1, &set(&[3, 5, 7])).unwrap();
        assert_eq!(m.combined.parts(), &[3, 5, 7]);
        assert!(m.nondivisible.is_empty());
        assert_eq!(m.k(), 3);

        let m = split_generators(3, &set(&[1, 2, 3])).unwrap();
        assert_eq!(m.divisible, vec![3]);
        assert_eq!(m.nondivisible, vec![1, 2]);
        assert_eq!(m.scaled, vec![3, 6]);
        assert_eq!(m.combined.parts(), &[3, 3, 6]);
        assert_eq!(m.l_max(), 6);

        assert_eq!(
            split_generators(0, &set(&[1])),
            Err(Error::InvalidPeriod(0))
        );
    }

    #[test]
    fn split_keeps_multiplicity_and_order() {
        let m = split_generators(2, &set(&[3, 4, 1, 4, 3])).unwrap();
        assert_eq!(m.divisible, vec![4, 4]);
        assert_eq!(m.nondivisible, vec![3, 1, 3]);
        assert_eq!(m.combined.parts(), &[4, 4, 6, 2, 6]);
    }

    #[test]
    fn wave_1_examples() {
        assert_eq!(wave_1(&set(&[1]), 13), rational(1));
        assert_eq!(wave_1(&set(&[1]), -4), rational(1));
        assert_eq!(wave_1(&set(&[1, 2]), 4), ratio(11, 4));
        assert_eq!(wave_1(&set(&[1, 1]), 7), rational(8));
        assert_eq!(
            polynomial_part(&set(&[1, 2])),
            RationalPolynomial::new(vec![ratio(3, 4), ratio(1, 2)])
        );
    }

    #[test]
    fn direct_examples() {
        let d = set(&[1, 2]);
        assert_eq!(wave_j_direct(2, &d, 4).unwrap(), ratio(1, 4));
        assert_eq!(wave_j_direct(2, &d, 5).unwrap(), ratio(-1, 4));
        // W(4, {2}) = 1 with an empty r-sum
        let d = set(&[2]);
        assert_eq!(
            wave_1(&d, 4) + wave_j_direct(2, &d, 4).unwrap(),
            rational(1)
        );
        assert_eq!(
            wave_1(&d, 5) + wave_j_direct(2, &d, 5).unwrap(),
            rational(0)
        );
    }

    #[test]
    fn direct_rejects_bad_indices() {
        let d = set(&[1, 2]);
        assert_eq!(wave_j_direct(1, &d, 0), Err(Error::WaveIndexTooSmall(1)));
        assert!(matches!(
            wave_j_direct(3, &d, 0),
            Err(Error::NotAWaveIndex { j: 3, .. })
        ));
    }

    #[test]
    fn weight_examples() {
        let d = set(&[1, 2, 3]);
        let w = weights_recursive(3, &d).unwrap();
        assert_eq!(w.l_max, 6);
        assert_eq!(w.weights, uints(&[1, 1, 2, 1, 2, 1, 1]));
        assert_eq!(weights_bruteforce(3, &d).unwrap(), w);

        let w = weights_recursive(2, &set(&[1, 2])).unwrap();
        assert_eq!((w.l_max, w.weights.clone()), (1, uints(&[1, 1])));

        assert_eq!(
            weights_bruteforce(2, &set(&[1, 3, 5])).unwrap().total(),
            BigUint::from(8u32)
        );
        assert_eq!(
            weights_bruteforce(2, &set(&[2, 4])).unwrap().weights,
            uints(&[1])
        );
        assert_eq!(
            weights_recursive(2, &set(&[2, 4])).unwrap().weights,
            uints(&[1])
        );
        assert_eq!(weights_recursive(1, &d), Err(Error::WaveIndexTooSmall(1)));
    }

    #[test]
    fn weights_through_waves_match_oracle() {
        for parts in [&[1u64, 2, 3][..], &[2, 3, 4, 6], &[1, 5, 5, 10]] {
            let d = set(parts);
            for j in d.divisors().into_iter().filter(|&j| j > 1) {
                assert_eq!(
                    weights_recursive_with(j, &d, ScalarCounter::Waves).unwrap(),
                    weights_recursive(j, &d).unwrap(),
                    "j={j} d={d}"
                );
            }
        }
    }

    #[test]
    fn unsigned_weights_differ() {
        let d = set(&[1, 2, 3]);
        assert_ne!(
            weights_recursive_unsigned(3, &d).unwrap(),
            weights_recursive(3, &d).unwrap()
        );
    }

    #[test]
    fn weighted_examples() {
        let d = set(&[1, 2]);
        let w = weights_recursive(2, &d).unwrap();
        assert_eq!(wave_j_weighted(2, &d, 4, &w).unwrap(), ratio(1, 4));
        assert_eq!(
            wave_1(&d, 0) + wave_j_weighted(2, &d, 0, &w).unwrap(),
            rational(1)
        );

        let d = set(&[1, 2, 3]);
        let w = weights_recursive(3, &d).unwrap();
        assert_eq!(
            wave_j_weighted(3, &d, 6, &w).unwrap(),
            wave_j_direct(3, &d, 6).unwrap()
        );
    }

    #[test]
    fn weighted_rejects_foreign_weights() {
        let d = set(&[1, 2, 3]);
        let w = weights_recursive(2, &set(&[1, 2])).unwrap();
        assert!(matches!(
            wave_j_weighted(3, &d, 0, &w),
            Err(Error::WeightMismatch { .. })
        ));
        let w = weights_recursive(3, &set(&[3, 4])).unwrap();
        assert!(matches!(
            wave_j_weighted(3, &d, 0, &w),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn symbolic_forms_agree_with_point_values() {
        let d = set(&[2, 3, 4]);
        for j in [2u64, 3, 4] {
            let w = weights_bruteforce(j, &d).unwrap();
            let weighted = periodic_wave_weighted(j, &d, &w).unwrap();
            let direct = periodic_wave_direct(j, &d).unwrap();
            assert_eq!(weighted, direct, "j={j}");
            for s in -5..20 {
                assert_eq!(weighted.eval(s), wave_j_direct(j, &d, s).unwrap());
                assert_eq!(weighted.eval(s), wave_j_weighted(j, &d, s, &w).unwrap());
            }
        }
    }

    #[test]
    fn well_formed_weights() {
        let w = weights_bruteforce(4, &set(&[1, 4, 6])).unwrap();
        assert!(weights_well_formed(&w));
        assert_eq!(w.get(w.l_max + 1), BigUint::zero());
    }
}
