//! Prime circulators `Psi_j(s)`: the sum of `rho^s` over the primitive
//! `j`-th roots of unity `rho`.
//!
//! The value is the Ramanujan sum `c_j(s) = sum_{e | gcd(j, s)} mu(j/e) e`,
//! which keeps everything in the integers.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{Error, Result};

/// Moebius function by trial division.
pub fn mobius(mut n: u64) -> i64 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Euler's totient by trial division.
pub fn euler_phi(mut n: u64) -> u64 {
    assert!(n >= 1, "totient is defined for n >= 1");
    let mut phi = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// `s mod j` in `[0, j)`, for any signed `s`.
pub(crate) fn residue(s: i128, j: u64) -> u64 {
    s.rem_euclid(j as i128) as u64
}

fn ramanujan_sum(j: u64, r: u64) -> i64 {
    let g = if r == 0 { j } else { j.gcd(&r) };
    (1..=g)
        .filter(|e| g % e == 0)
        .map(|e| mobius(j / e) * e as i64)
        .sum()
}

/// `Psi_j(s)` evaluated exactly.
pub fn prime_circulator(j: i64, s: i64) -> Result<i64> {
    if j < 1 {
        return Err(Error::InvalidPeriod(j));
    }
    let j = j as u64;
    Ok(ramanujan_sum(j, residue(s as i128, j)))
}

/// `Psi_j(s)` summed directly over `exp(2 pi i n s / j)` with `gcd(n, j) = 1`.
///
/// Floating point; intended only as a cross-check of [`prime_circulator`].
pub fn prime_circulator_complex(j: u64, s: i64) -> Complex64 {
    assert!(j >= 1, "period must be positive");
    let r = residue(s as i128, j);
    (1..=j)
        .filter(|&n| n.gcd(&j) == 1)
        .map(|n| {
            // Reduce n*s mod j first so the angle stays in [0, 2pi).
            let k = (n as u128 * r as u128 % j as u128) as f64;
            Complex64::from_polar(1.0, TAU * k / j as f64)
        })
        .sum()
}

/// A period `j >= 1` with its circulator values tabulated over one period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circulator {
    j: u64,
    table: Vec<i64>,
}

impl Circulator {
    pub fn new(j: u64) -> Result<Self> {
        if j == 0 {
            return Err(Error::InvalidPeriod(0));
        }
        let table = (0..j).map(|r| ramanujan_sum(j, r)).collect();
        Ok(Self { j, table })
    }

    pub fn period(&self) -> u64 {
        self.j
    }

    pub fn at(&self, s: i128) -> i64 {
        self.table[residue(s, self.j) as usize]
    }

    /// Values at residues `0..j`.
    pub fn values(&self) -> &[i64] {
        &self.table
    }
}
