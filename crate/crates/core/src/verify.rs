//! Self-verification sweeps: every identity the engine relies on, checked
//! against the brute-force oracles over a configurable corpus of generator
//! sets.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circulator::{euler_phi, prime_circulator, prime_circulator_complex};
use crate::error::Result;
use crate::generators::GeneratorSet;
use crate::numeric::Rational;
use crate::oracle::{build_system, count_vector_partitions, partition_table};
use crate::partition::{wave_indices, SylvesterExpansion};
use crate::waves::{
    periodic_wave_direct, periodic_wave_weighted, split_generators, wave_j_direct, wave_j_weighted,
    weights_bruteforce, weights_recursive, weights_recursive_unsigned, WeightVector,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Exhaustive corpus: every multiset of size `1..=max_m` over `1..=max_d`.
    pub max_m: usize,
    pub max_d: u64,
    /// Partition counts are compared for `s in 0..=max_s`.
    pub max_s: u64,
    pub seed: u64,
    /// Extra seeded random multisets.
    pub random_sets: usize,
    pub random_max_m: usize,
    pub random_max_d: u64,
    /// Circulator identities are checked for `j in 1..=max_circulator_j`.
    pub max_circulator_j: u64,
    /// Replace the recursive weights with a sign-dropped variant; the sweep
    /// must then fail.
    pub negative_control: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_m: 3,
            max_d: 6,
            max_s: 100,
            seed: 0,
            random_sets: 0,
            random_max_m: 5,
            random_max_d: 12,
            max_circulator_j: 24,
            negative_control: false,
        }
    }
}

/// All nondecreasing sequences of length `1..=max_m` over `1..=max_d`.
pub fn exhaustive_corpus(max_m: usize, max_d: u64) -> Vec<GeneratorSet> {
    fn extend(
        prefix: &mut Vec<u64>,
        lo: u64,
        max_d: u64,
        left: usize,
        out: &mut Vec<GeneratorSet>,
    ) {
        if !prefix.is_empty() {
            out.push(GeneratorSet::new(prefix.clone()).expect("positive parts"));
        }
        if left == 0 {
            return;
        }
        for d in lo..=max_d {
            prefix.push(d);
            extend(prefix, d, max_d, left - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if max_d > 0 {
        extend(&mut Vec::new(), 1, max_d, max_m, &mut out);
    }
    out
}

/// `count` multisets with size uniform in `1..=max_m` and parts uniform in
/// `1..=max_d`, reproducible from `seed`.
pub fn random_corpus(seed: u64, count: usize, max_m: usize, max_d: u64) -> Vec<GeneratorSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let m = rng.gen_range(1..=max_m.max(1));
            let parts = (0..m).map(|_| rng.gen_range(1..=max_d.max(1))).collect();
            GeneratorSet::new(parts).expect("positive parts")
        })
        .collect()
}

pub fn corpus(cfg: &VerifyConfig) -> Vec<GeneratorSet> {
    let mut sets = exhaustive_corpus(cfg.max_m, cfg.max_d);
    sets.extend(random_corpus(
        cfg.seed,
        cfg.random_sets,
        cfg.random_max_m,
        cfg.random_max_d,
    ));
    sets
}

/// First mismatch found by a suite, with every coordinate that locates it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub suite: &'static str,
    pub parts: Vec<u64>,
    pub s: Option<i64>,
    pub j: Option<u64>,
    pub l: Option<u64>,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "suite={} d={:?}", self.suite, self.parts)?;
        if let Some(s) = self.s {
            write!(f, " s={s}")?;
        }
        if let Some(j) = self.j {
            write!(f, " j={j}")?;
        }
        if let Some(l) = self.l {
            write!(f, " l={l}")?;
        }
        write!(f, ": expected {}, found {}", self.expected, self.found)
    }
}

/// Outcome of one sweep: the number of individual comparisons made and the
/// first failure, if any.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: u64,
    pub failure: Option<Counterexample>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Folds `other` in, keeping the earliest failure.
    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }
}

struct Checker {
    report: Report,
}

impl Checker {
    fn new() -> Self {
        Self {
            report: Report::default(),
        }
    }

    fn check<T: PartialEq + fmt::Display>(
        &mut self,
        expected: T,
        found: T,
        locate: impl FnOnce() -> Counterexample,
    ) -> bool {
        self.report.checks += 1;
        if expected == found {
            return true;
        }
        let mut cx = locate();
        cx.expected = expected.to_string();
        cx.found = found.to_string();
        self.report.failure = Some(cx);
        false
    }
}

fn at(suite: &'static str, d: &GeneratorSet) -> Counterexample {
    Counterexample {
        suite,
        parts: d.parts().to_vec(),
        s: None,
        j: None,
        l: None,
        expected: String::new(),
        found: String::new(),
    }
}

/// Periodicity, zero mean, `Psi_j(0) = phi(j)`, and agreement with the
/// complex-exponential definition, for `j in 1..=max_j`.
pub fn verify_circulators(max_j: u64) -> Report {
    let mut ck = Checker::new();
    let here = |j: u64, s: i64| Counterexample {
        suite: "circulator",
        parts: Vec::new(),
        s: Some(s),
        j: Some(j),
        l: None,
        expected: String::new(),
        found: String::new(),
    };
    for j in 1..=max_j {
        let jj = j as i64;
        let psi = |s: i64| prime_circulator(jj, s).expect("positive period");
        for s in -jj..2 * jj {
            if !ck.check(psi(s), psi(s + jj), || here(j, s)) {
                return ck.report;
            }
        }
        if j >= 2 {
            let mean: i64 = (0..jj).map(psi).sum();
            if !ck.check(0, mean, || here(j, 0)) {
                return ck.report;
            }
        }
        if !ck.check(euler_phi(j) as i64, psi(0), || here(j, 0)) {
            return ck.report;
        }
        let tol = 1e-9 * (euler_phi(j) as f64).max(1.0);
        for s in 0..jj {
            let z = prime_circulator_complex(j, s);
            let close = (z.re - psi(s) as f64).abs() <= tol && z.im.abs() <= 1e-9;
            if !ck.check(true, close, || here(j, s)) {
                return ck.report;
            }
        }
    }
    ck.report
}

/// Weight routine under test in [`verify_weights`].
pub type WeightRule = fn(u64, &GeneratorSet) -> Result<WeightVector>;

/// For every wave index `j >= 2` of `d` and every `l` (one past `l_max`
/// included): enumeration, the vector-partition system, and `recursive`
/// agree; the total mass is `j^(m - k_j)`.
pub fn verify_weights(d: &GeneratorSet, recursive: WeightRule) -> Report {
    let mut ck = Checker::new();
    for j in wave_indices(d).into_iter().filter(|&j| j >= 2) {
        let split = split_generators(j, d).expect("j >= 1");
        let brute = weights_bruteforce(j, d).expect("wave index");
        let rec = recursive(j, d).expect("wave index");
        let here = |l: Option<u64>| Counterexample {
            j: Some(j),
            l,
            ..at("weights", d)
        };
        if !ck.check(brute.l_max, rec.l_max, || here(None)) {
            return ck.report;
        }
        for l in 0..=brute.l_max + 1 {
            let system = if split.free_count() == 0 {
                if l == 0 {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            } else {
                count_vector_partitions(&build_system(j, d, l).expect("free generators"))
                    .expect("well-formed system")
            };
            if !ck.check(brute.get(l), system, || here(Some(l))) {
                return ck.report;
            }
            if !ck.check(brute.get(l), rec.get(l), || here(Some(l))) {
                return ck.report;
            }
        }
        let mass = BigUint::from(j).pow(split.free_count() as u32);
        if !ck.check(mass, rec.total(), || here(None)) {
            return ck.report;
        }
    }
    ck.report
}

/// Direct and weighted waves agree as per-residue polynomials, hence at
/// every `s in 0..=3 lcm(d)`; the point evaluators are spot-checked too.
pub fn verify_wave_forms(d: &GeneratorSet, recursive: WeightRule) -> Report {
    let mut ck = Checker::new();
    let s_end = 3 * d.lcm() as i64;
    for j in wave_indices(d).into_iter().filter(|&j| j >= 2) {
        let w = recursive(j, d).expect("wave index");
        let here = |s: i64| Counterexample {
            s: Some(s),
            j: Some(j),
            ..at("wave-forms", d)
        };
        let direct = periodic_wave_direct(j, d).expect("wave index");
        let weighted = match periodic_wave_weighted(j, d, &w) {
            Ok(p) => p,
            Err(e) => {
                ck.check("weights".to_owned(), e.to_string(), || here(0));
                return ck.report;
            }
        };
        for c in 0..j as i64 {
            let (a, b) = (direct.residue_polynomial(c), weighted.residue_polynomial(c));
            if !ck.check(a.to_string(), b.to_string(), || here(c)) {
                return ck.report;
            }
        }
        for s in 0..=s_end {
            if !ck.check(direct.eval(s), weighted.eval(s), || here(s)) {
                return ck.report;
            }
        }
        for s in [0, 1, s_end] {
            let a = wave_j_direct(j, d, s).expect("wave index");
            let b = wave_j_weighted(j, d, s, &w).expect("matching weights");
            if !ck.check(a, b, || here(s)) {
                return ck.report;
            }
        }
    }
    ck.report
}

/// Wave sum equals the DP count for `s in 0..=max_s`, and the quasipolynomial
/// equals the DP count for `s in 0..=3 lcm(d)`.
pub fn verify_counts(d: &GeneratorSet, max_s: u64, recursive: WeightRule) -> Report {
    let mut ck = Checker::new();
    let period = d.lcm();
    let top = max_s.max(3 * period);
    let table = partition_table(d.parts(), top);
    let expansion = expansion_with(d, recursive);
    for s in 0..=max_s {
        let here = || Counterexample {
            s: Some(s as i64),
            ..at("oracle", d)
        };
        match expansion.count(s) {
            Ok(total) => {
                if !ck.check(&table[s as usize], &total, here) {
                    return ck.report;
                }
            }
            Err(e) => {
                ck.check(table[s as usize].to_string(), e.to_string(), here);
                return ck.report;
            }
        }
    }
    let q = expansion.quasipolynomial();
    for s in 0..=3 * period {
        let expected = Rational::from_integer(BigInt::from(table[s as usize].clone()));
        if !ck.check(expected, q.eval(s), || Counterexample {
            s: Some(s as i64),
            ..at("quasipolynomial", d)
        }) {
            return ck.report;
        }
    }
    ck.report
}

fn expansion_with(d: &GeneratorSet, recursive: WeightRule) -> SylvesterExpansion {
    SylvesterExpansion::from_weights(d, |j| recursive(j, d).expect("wave index"))
}

fn rule(cfg: &VerifyConfig) -> WeightRule {
    if cfg.negative_control {
        weights_recursive_unsigned
    } else {
        weights_recursive
    }
}

/// All per-set suites for one generator set.
pub fn verify_set(cfg: &VerifyConfig, d: &GeneratorSet) -> Report {
    let recursive = rule(cfg);
    let mut report = verify_weights(d, recursive);
    if report.passed() {
        report.merge(verify_wave_forms(d, recursive));
    }
    if report.passed() {
        report.merge(verify_counts(d, cfg.max_s, recursive));
    }
    report
}

/// Circulator suite followed by every per-set suite over [`corpus`]; stops at
/// the first failure.
pub fn run(cfg: &VerifyConfig) -> Report {
    let mut report = verify_circulators(cfg.max_circulator_j);
    for d in corpus(cfg) {
        if !report.passed() {
            break;
        }
        report.merge(verify_set(cfg, &d));
    }
    report
}
