//! Exact rational scalars, dense univariate polynomials and truncated power
//! series.
//!
//! Every coefficient is a [`Rational`] kept in lowest terms, so no routine in
//! this module ever rounds.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always normalized.
pub type Rational = BigRational;

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Shorthand for an integral rational.
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`; panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Dense polynomial in one variable; `coeffs[i]` multiplies `x^i`.
///
/// Trailing zeros are always trimmed, so two equal polynomials compare equal
/// structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact value at `x` by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Exact value at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> Rational {
        self.eval(&Rational::from_integer(x.clone()))
    }

    /// Splits `p` as `q / den` with integer coefficients `q` and the least
    /// positive `den`.
    pub fn clear_denominators(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (num, den)
    }

    /// Returns `q` with `q(x) = p(x + a)`.
    pub fn shift(&self, a: &Rational) -> Self {
        if self.coeffs.len() <= 1 || a.is_zero() {
            return self.clone();
        }
        // Repeated synthetic division (Taylor shift), O(n^2) exact operations.
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for k in (i..n - 1).rev() {
                let carry = &c[k + 1] * a;
                c[k] += carry;
            }
        }
        Self::new(c)
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `self += k * other`, in place.
    pub fn add_scaled(&mut self, other: &Self, k: &Rational) {
        if k.is_zero() || other.is_zero() {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *dst += src * k;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (k, b) in rhs.coeffs.iter().enumerate() {
                c[i + k] += a * b;
            }
        }
        RationalPolynomial::new(c)
    }
}

impl fmt::Display for RationalPolynomial {
    /// Human-readable form in `s`, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_coeff = power == 0 || !magnitude.is_one();
            if show_coeff {
                if magnitude.is_integer() {
                    write!(f, "{magnitude}")?;
                } else {
                    write!(f, "({magnitude})")?;
                }
            }
            match power {
                0 => {}
                1 => write!(f, "{}s", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}s^{power}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// Power series in `t` truncated after `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Pads with zeros or drops terms so exactly `order + 1` coefficients
    /// remain.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// Cauchy product truncated at `order`.
    ///
    /// Panics if either operand is truncated below `order`.
    pub fn mul(&self, other: &Self, order: usize) -> Self {
        assert!(
            self.order() >= order && other.order() >= order,
            "series truncated below requested order {order}"
        );
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .filter(|&k| !self.coeffs[k].is_zero())
                    .map(|k| &self.coeffs[k] * &other.coeffs[n - k])
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .collect();
        Self { coeffs }
    }
}

/// Free-function form of [`TruncatedSeries::mul`].
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries, order: usize) -> TruncatedSeries {
    a.mul(b, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[(i64, i64)]) -> RationalPolynomial {
        RationalPolynomial::new(c.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(RationalPolynomial::zero().eval(&rational(7)), rational(0));
        assert_eq!(poly(&[(-3, 2), (1, 1)]).eval(&rational(4)), ratio(5, 2));
        assert_eq!(
            RationalPolynomial::from_integers(&[0, 0, 1]).eval(&rational(-2)),
            rational(4)
        );
    }

    #[test]
    fn shift_examples() {
        let x = RationalPolynomial::x();
        assert_eq!(
            x.shift(&rational(3)),
            RationalPolynomial::from_integers(&[3, 1])
        );
        let sq = RationalPolynomial::from_integers(&[0, 0, 1]);
        assert_eq!(
            sq.shift(&rational(1)),
            RationalPolynomial::from_integers(&[1, 2, 1])
        );
        let five = RationalPolynomial::constant(rational(5));
        assert_eq!(five.shift(&rational(-9)), five);
    }

    #[test]
    fn clearing_denominators() {
        let (num, den) = poly(&[(1, 2), (-1, 3), (2, 1)]).clear_denominators();
        assert_eq!(
            num,
            vec![BigInt::from(3), BigInt::from(-2), BigInt::from(12)]
        );
        assert_eq!(den, BigInt::from(6));
        let (num, den) = RationalPolynomial::zero().clear_denominators();
        assert!(num.is_empty());
        assert_eq!(den, BigInt::one());
    }

    #[test]
    fn degree_of_zero_is_minus_one() {
        assert_eq!(RationalPolynomial::zero().degree(), -1);
        assert_eq!(RationalPolynomial::from_integers(&[1, 0, 0]).degree(), 0);
    }

    #[test]
    fn series_examples() {
        let one = TruncatedSeries::one(1);
        let b = TruncatedSeries::new(vec![rational(1), rational(1)], 1);
        assert_eq!(series_mul(&one, &b, 1), b);

        let a = TruncatedSeries::new(vec![rational(1), ratio(-1, 2)], 1);
        let b = TruncatedSeries::new(vec![rational(1), rational(-1)], 1);
        let prod = series_mul(&a, &b, 1);
        assert_eq!(prod.coeffs(), &[rational(1), ratio(-3, 2)]);
        // Full polynomial product, truncated by hand.
        let full = &poly(&[(1, 1), (-1, 2)]) * &poly(&[(1, 1), (-1, 1)]);
        assert_eq!(&full.coeffs()[..2], prod.coeffs());

        let t = TruncatedSeries::new(vec![rational(0), rational(1)], 1);
        assert_eq!(series_mul(&t, &t, 1).coeffs(), &[rational(0), rational(0)]);
    }

    #[test]
    #[should_panic]
    fn series_mul_rejects_short_operand() {
        let a = TruncatedSeries::one(1);
        let _ = a.mul(&a, 3);
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[(1, 1), (1, 2)]).to_string(), "(1/2)*s + 1");
        assert_eq!(
            RationalPolynomial::from_integers(&[-1, 0, 1]).to_string(),
            "s^2 - 1"
        );
        assert_eq!(RationalPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
