//! Exact factorials, binomials and multinomials.
//!
//! All functions work on signed arguments because the closed-form sums
//! routinely step outside the natural range; out-of-range arguments
//! evaluate to zero instead of panicking.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `n!` for `n >= 0`.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// `1/n!`, with the convention that the reciprocal of a negative factorial
/// is zero. Truncating sums rely on this.
pub fn recip_factorial(n: i64) -> BigRational {
    if n < 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::one(), factorial(n as u64))
    }
}

/// `m!! = 1 * 3 * ... * m` for odd `m`; `1` for `m` in `{-1, 0}`.
///
/// Only odd arguments (and the two empty-product cases) are accepted.
pub fn double_factorial(m: i64) -> Result<BigInt> {
    if m == -1 || m == 0 {
        return Ok(BigInt::one());
    }
    if m < -1 || m % 2 == 0 {
        return Err(Error::EvenDoubleFactorial(m));
    }
    Ok((1..=m).step_by(2).fold(BigInt::one(), |acc, j| acc * j))
}

/// `C(n, k)`, zero whenever `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// `(sum parts)! / prod(parts!)`, or zero if any part is negative.
pub fn multinomial(parts: &[i64]) -> BigInt {
    if parts.iter().any(|&p| p < 0) {
        return BigInt::zero();
    }
    let mut total = 0i64;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// `2^e` as a big integer.
pub fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// Returns the integer value of `r`, or an error naming `what` if `r` has a
/// nontrivial denominator.
pub fn expect_integer(r: &BigRational, what: &str) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{what} evaluated to {r}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_factorial_values() {
        assert_eq!(double_factorial(1).unwrap(), BigInt::from(1));
        assert_eq!(double_factorial(5).unwrap(), BigInt::from(15));
        assert_eq!(double_factorial(-1).unwrap(), BigInt::from(1));
        assert_eq!(double_factorial(0).unwrap(), BigInt::from(1));
        assert_eq!(double_factorial(13).unwrap(), BigInt::from(135135));
        assert_eq!(double_factorial(4), Err(Error::EvenDoubleFactorial(4)));
        assert!(double_factorial(-3).is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[0, 0, 0]), BigInt::one());
        assert_eq!(multinomial(&[1, 1, 1]), BigInt::from(6));
        assert_eq!(multinomial(&[2, -1, 1]), BigInt::zero());
        assert_eq!(multinomial(&[]), BigInt::one());
    }

    #[test]
    fn reciprocal_factorial_vanishes_below_zero() {
        assert!(recip_factorial(-1).is_zero());
        assert_eq!(recip_factorial(3), BigRational::new(1.into(), 6.into()));
    }

    #[test]
    fn multinomial_is_factorial_ratio() {
        for a in 0..=4i64 {
            for b in 0..=4i64 {
                for c in 0..=4i64 {
                    let want = factorial((a + b + c) as u64)
                        / (factorial(a as u64) * factorial(b as u64) * factorial(c as u64));
                    assert_eq!(multinomial(&[a, b, c]), want);
                }
            }
        }
    }
}
