//! Higher-order Bernoulli polynomials `B^(m)_n(s, d)`, defined by
//!
//! ```text
//! e^{st} t^m pi_m / prod_i (e^{d_i t} - 1) = sum_n B^(m)_n(s, d) t^n / n!
//! ```
//!
//! Each factor `d t / (e^{d t} - 1)` has the closed-form expansion
//! `sum_k B_k d^k t^k / k!`, so the left side is a product of known series and
//! no power-series division is required.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::generators::GeneratorSet;
use crate::numeric::{binomial, factorial, Rational, RationalPolynomial, TruncatedSeries};

/// Classical Bernoulli numbers `B_0..=B_{n_max}` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n_max: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n_max + 1);
    b.push(Rational::one());
    for n in 1..=n_max as u64 {
        // sum_{k=0}^{n} C(n+1, k) B_k = 0
        let acc = (0..n).fold(Rational::zero(), |acc, k| {
            acc + Rational::from_integer(binomial(n + 1, k)) * &b[k as usize]
        });
        b.push(-acc / Rational::from_integer(BigInt::from(n + 1)));
    }
    b
}

/// Series of `d t / (e^{d t} - 1)` to the given order.
fn factor_series(d: u64, bernoulli: &[Rational], order: usize) -> TruncatedSeries {
    let d = BigInt::from(d);
    let mut power = BigInt::one();
    let coeffs = (0..=order)
        .map(|k| {
            let c = &bernoulli[k] * Rational::new(power.clone(), factorial(k as u64));
            power *= &d;
            c
        })
        .collect();
    TruncatedSeries::new(coeffs, order)
}

/// Series of `t^m pi_m / prod_i (e^{d_i t} - 1)` to the given order.
pub fn kernel_series(d: &GeneratorSet, order: usize) -> TruncatedSeries {
    let bernoulli = bernoulli_numbers(order);
    d.parts()
        .iter()
        .fold(TruncatedSeries::one(order), |acc, &di| {
            acc.mul(&factor_series(di, &bernoulli, order), order)
        })
}

/// `B^(m)_n(s, d)` as a polynomial in `s`; monic of degree `n`.
pub fn hob_polynomial(n: usize, d: &GeneratorSet) -> RationalPolynomial {
    let kernel = kernel_series(d, n);
    // n! [t^n] kernel(t) e^{st} = sum_k c_k n!/(n-k)! s^{n-k}
    let n_fact = factorial(n as u64);
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (k, c) in kernel.coeffs().iter().enumerate() {
        let falling = Rational::new(n_fact.clone(), factorial((n - k) as u64));
        coeffs[n - k] = c * falling;
    }
    RationalPolynomial::new(coeffs)
}

/// Point value of [`hob_polynomial`].
pub fn hob_eval(n: usize, d: &GeneratorSet, s: &Rational) -> Rational {
    hob_polynomial(n, d).eval(s)
}
