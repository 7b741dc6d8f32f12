//! Exact scalar arithmetic shared by every pipeline.
//!
//! All quantities are arbitrary-precision rationals in lowest terms with a
//! positive denominator. Two conventions are fixed crate-wide:
//!
//! * `0^0 = 1`
//! * `binom(x, 0) = 1` for every rational `x`, negative integers included.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};

/// Arbitrary-precision rational, always kept in canonical form.
///
/// Displays as `p/q`, or `p` when the denominator is one.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `p/q` as a rational. Panics if `q == 0`.
pub fn ratio(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Rational {
    Rational::new(p.into(), q.into())
}

/// True when `q > 0` and `gcd(|p|, q) = 1` (zero must be `0/1`).
pub fn is_canonical(x: &Rational) -> bool {
    let (p, q) = (x.numer(), x.denom());
    q.is_positive() && p.gcd(q).is_one()
}

/// Converts an integral rational to `BigInt`, otherwise reports which
/// quantity failed to be integral.
pub fn to_integer(x: Rational, what: impl FnOnce() -> String) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::NonIntegral {
            what: what(),
            value: x.to_string(),
        })
    }
}

/// `n!` exactly.
pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Integer binomial coefficient `C(n, j)` for `0 <= n`.
///
/// Multiplicative scheme: with `acc = C(n, i)`, `acc * (n - i)` equals
/// `C(n, i+1) * (i+1)`, so every division is exact.
pub fn binomial_int(n: u64, j: u64) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    let j = j.min(n - j);
    let mut acc = BigInt::one();
    for i in 0..j {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Generalized binomial `binom(x, j) = x (x-1) ... (x-j+1) / j!` for any
/// rational `x`.
pub fn binomial(x: &Rational, j: u32) -> Rational {
    if x.is_integer() && !x.is_negative() {
        let n = x.to_integer();
        if let Ok(n) = u64::try_from(&n) {
            return int(binomial_int(n, j as u64));
        }
    }
    let mut num = Rational::one();
    let mut term = x.clone();
    for _ in 0..j {
        num *= &term;
        term -= Rational::one();
    }
    num / int(factorial(j))
}

/// `binom(x, j)` for signed `j`, rejecting `j < 0`.
pub fn binomial_checked(x: &Rational, j: i64) -> Result<Rational> {
    let j = u32::try_from(j).map_err(|_| domain(format!("binomial index {j} must be >= 0")))?;
    Ok(binomial(x, j))
}

/// `base^e` with `0^0 = 1`.
pub fn pow(base: &Rational, e: u32) -> Rational {
    num_traits::pow(base.clone(), e as usize)
}

/// Integer power with `0^0 = 1`.
pub fn pow_int(base: &BigInt, e: u32) -> BigInt {
    num_traits::pow(base.clone(), e as usize)
}

/// `(-1)^e` as a sign multiplier.
pub fn sign(e: u32) -> i32 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Factorial for signed input, rejecting negatives.
pub fn factorial_checked(n: i64) -> Result<BigInt> {
    let n = u32::try_from(n).map_err(|_| domain(format!("factorial argument {n} must be >= 0")))?;
    Ok(factorial(n))
}

/// Power for signed exponent, rejecting negatives.
pub fn pow_checked(base: &Rational, e: i64) -> Result<Rational> {
    let e = u32::try_from(e).map_err(|_| domain(format!("exponent {e} must be >= 0")))?;
    Ok(pow(base, e))
}
