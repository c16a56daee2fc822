//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// The integer `v` as a rational.
pub fn int(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// The reduced fraction `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical text: `p` for integers, `p/q` otherwise.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Parses `p`, `-p`, `p/q` (whitespace tolerated). Zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    t.parse::<BigRational>()
        .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
}

/// `k!` as a rational.
pub fn factorial(k: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= i;
    }
    BigRational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)` (zero when `k > n`).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Returns the value as a non-negative integer if it is one.
pub fn as_nonneg_int(q: &Rational) -> Option<u64> {
    if q.is_integer() && !q.is_negative() {
        q.to_integer().to_u64()
    } else {
        None
    }
}

/// Returns the value as an `i64` if it is an integer in range.
pub fn as_int(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// Least common multiple of the denominators, as an integer rational.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    let mut l = BigInt::one();
    for v in values {
        if !v.is_zero() {
            l = num_integer::lcm(l, v.denom().clone());
        }
    }
    l
}
