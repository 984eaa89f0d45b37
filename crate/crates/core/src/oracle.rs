//! Brute-force ground truth with no dependence on the wave machinery.
//!
//! * [`count_partitions_dp`]: the classic coin-change table sweep.
//! * [`build_system`] / [`count_vector_partitions`]: bounded `r` vectors with
//!   `r . d = l` written as a vector partition with slack variables and
//!   counted by exhaustive enumeration.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::generators::GeneratorSet;

/// Number of solutions of `sum_i d_i x_i = s` with all `x_i >= 0`, for every
/// `s` in `0..=s_max`.
pub fn partition_table(parts: &[u64], s_max: u64) -> Vec<BigUint> {
    let len = s_max as usize + 1;
    let mut ways = vec![BigUint::zero(); len];
    ways[0] = BigUint::one();
    for &d in parts {
        let d = d as usize;
        for s in d..len {
            let (lo, hi) = ways.split_at_mut(s);
            hi[0] += &lo[s - d];
        }
    }
    ways
}

/// Number of partitions of `s` into the generators of `d`; zero for `s < 0`.
pub fn count_partitions_dp(d: &GeneratorSet, s: i64) -> BigUint {
    if s < 0 {
        return BigUint::zero();
    }
    partition_table(d.parts(), s as u64).pop().unwrap()
}

/// `D . R = S` with `R = (r_1..r_n, rho_1..rho_n)` nonnegative.
///
/// Row 0 is `(d_1..d_n, 0..0)` with right side `l`; row `i >= 1` is
/// `r_i + rho_i = j - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineSystem {
    pub matrix: Vec<Vec<u64>>,
    pub rhs: Vec<u64>,
}

impl DiophantineSystem {
    /// Number of bounded variables `n`.
    pub fn free_variables(&self) -> usize {
        self.rhs.len().saturating_sub(1)
    }

    fn check_shape(&self) -> Result<usize> {
        let rows = self.matrix.len();
        let cols = self.matrix.first().map_or(0, Vec::len);
        let n = rows.saturating_sub(1);
        let ok = rows >= 2
            && cols == 2 * n
            && self.rhs.len() == rows
            && self.matrix.iter().all(|row| row.len() == cols)
            // slack block must be diagonal with positive entries
            && (1..rows).all(|k| {
                (0..n).all(|c| (self.matrix[k][n + c] != 0) == (c + 1 == k))
            })
            && self.matrix[0][n..].iter().all(|&x| x == 0);
        if ok {
            Ok(n)
        } else {
            Err(Error::MalformedSystem { rows, cols })
        }
    }
}

/// Builds the system whose solutions are the `r` in `[0, j-1]^n` with
/// `r . d' = l`, where `d'` are the generators not divisible by `j`.
pub fn build_system(j: u64, d: &GeneratorSet, l: u64) -> Result<DiophantineSystem> {
    if j == 0 {
        return Err(Error::InvalidPeriod(0));
    }
    let free: Vec<u64> = d.parts().iter().copied().filter(|x| x % j != 0).collect();
    let n = free.len();
    if n == 0 {
        return Err(Error::NoFreeGenerators { j });
    }
    let mut matrix = Vec::with_capacity(n + 1);
    let mut first = free;
    first.resize(2 * n, 0);
    matrix.push(first);
    for i in 0..n {
        let mut row = vec![0; 2 * n];
        row[i] = 1;
        row[n + i] = 1;
        matrix.push(row);
    }
    let mut rhs = vec![j - 1; n + 1];
    rhs[0] = l;
    Ok(DiophantineSystem { matrix, rhs })
}

/// Counts nonnegative integer `R` with `D . R = S` by enumerating the `r`
/// block inside the box its slack rows impose; the slacks are then forced.
pub fn count_vector_partitions(sys: &DiophantineSystem) -> Result<BigUint> {
    let n = sys.check_shape()?;
    let mut r = vec![0u64; n];
    let mut count = BigUint::zero();
    enumerate(sys, n, 0, 0, &mut r, &mut count);
    Ok(count)
}

fn enumerate(
    sys: &DiophantineSystem,
    n: usize,
    idx: usize,
    partial: u64,
    r: &mut [u64],
    count: &mut BigUint,
) {
    let target = sys.rhs[0];
    if idx == n {
        if partial == target && slacks_feasible(sys, n, r) {
            *count += 1u32;
        }
        return;
    }
    let weight = sys.matrix[0][idx];
    let mut value = 0u64;
    loop {
        let sum = partial + weight * value;
        if sum > target || sys.matrix[idx + 1][idx] * value > sys.rhs[idx + 1] {
            break;
        }
        r[idx] = value;
        enumerate(sys, n, idx + 1, sum, r, count);
        if weight == 0 && sys.matrix[idx + 1][idx] == 0 {
            // unbounded direction; never produced by build_system
            break;
        }
        value += 1;
    }
}

fn slacks_feasible(sys: &DiophantineSystem, n: usize, r: &[u64]) -> bool {
    (1..=n).all(|k| {
        let used: u64 = (0..n).map(|c| sys.matrix[k][c] * r[c]).sum();
        let Some(rest) = sys.rhs[k].checked_sub(used) else {
            return false;
        };
        rest % sys.matrix[k][n + k - 1] == 0
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(p: &[u64]) -> GeneratorSet {
        GeneratorSet::new(p.to_vec()).unwrap()
    }

    #[test]
    fn dp_examples() {
        assert_eq!(count_partitions_dp(&set(&[1, 2]), 4), BigUint::from(3u32));
        assert_eq!(
            count_partitions_dp(&set(&[1, 2, 3]), 5),
            BigUint::from(5u32)
        );
        assert_eq!(count_partitions_dp(&set(&[3, 7]), -1), BigUint::zero());
        assert_eq!(count_partitions_dp(&set(&[3, 7]), 0), BigUint::one());
        assert_eq!(count_partitions_dp(&set(&[2]), 3), BigUint::zero());
    }

    #[test]
    fn system_layout() {
        let sys = build_system(3, &set(&[1, 2, 3]), 2).unwrap();
        assert_eq!(
            sys.matrix,
            vec![vec![1, 2, 0, 0], vec![1, 0, 1, 0], vec![0, 1, 0, 1]]
        );
        assert_eq!(sys.rhs, vec![2, 2, 2]);

        let sys = build_system(2, &set(&[1, 2]), 1).unwrap();
        assert_eq!(sys.matrix, vec![vec![1, 0], vec![1, 1]]);
        assert_eq!(sys.rhs, vec![1, 1]);

        let sys = build_system(2, &set(&[1, 3, 4]), 0).unwrap();
        assert_eq!(sys.rhs, vec![0, 1, 1]);
        assert_eq!(sys.free_variables(), 2);
    }

    #[test]
    fn system_needs_free_generator() {
        assert_eq!(
            build_system(2, &set(&[2, 4]), 0),
            Err(Error::NoFreeGenerators { j: 2 })
        );
    }

    #[test]
    fn vector_partition_examples() {
        let count = |j, p: &[u64], l| {
            count_vector_partitions(&build_system(j, &set(p), l).unwrap()).unwrap()
        };
        assert_eq!(count(3, &[1, 2, 3], 2), BigUint::from(2u32));
        assert_eq!(count(2, &[1, 2], 1), BigUint::one());
        assert_eq!(count(3, &[1, 2, 3], 7), BigUint::zero());
    }

    #[test]
    fn malformed_system_rejected() {
        let sys = DiophantineSystem {
            matrix: vec![vec![1, 2, 3]],
            rhs: vec![1],
        };
        assert!(matches!(
            count_vector_partitions(&sys),
            Err(Error::MalformedSystem { .. })
        ));
    }
}
