//! Exact rational scalars and the `p/q` string form used everywhere else.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::str::FromStr;
use thiserror::Error;

/// Arbitrary-precision rational. Always reduced to lowest terms with a
/// positive denominator; the canonical zero is `0/1`.
pub type BigRat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RatError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    Parse(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Rational from machine integers. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> BigRat {
    BigRational::from_integer(BigInt::from(n))
}

/// `base^exp` over the integers, with the `0^0 = 1` convention.
pub fn int_pow(base: &BigInt, exp: u32) -> BigInt {
    if exp == 0 {
        BigInt::one()
    } else {
        base.pow(exp)
    }
}

/// `base^exp` with signed exponents and `0^0 = 1`.
///
/// Panics when raising zero to a negative power.
pub fn rat_pow(base: &BigRat, exp: i64) -> BigRat {
    if exp >= 0 {
        let e = u32::try_from(exp).expect("exponent fits in u32");
        BigRational::new_raw(int_pow(base.numer(), e), int_pow(base.denom(), e))
    } else {
        assert!(!base.is_zero(), "zero has no negative powers");
        let e = u32::try_from(-exp).expect("exponent fits in u32");
        BigRational::new(int_pow(base.denom(), e), int_pow(base.numer(), e))
    }
}

/// Exact division with a zero divisor reported as an error value.
pub fn checked_div(a: &BigRat, b: &BigRat) -> Result<BigRat, RatError> {
    if b.is_zero() {
        Err(RatError::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

/// Parse `p` or `p/q` with arbitrary-precision parts. The result is reduced
/// and denominator-positive regardless of the input's form.
pub fn parse_rat(s: &str) -> Result<BigRat, RatError> {
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| RatError::Parse(s.to_string()))?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num).map_err(|_| RatError::Parse(s.to_string()))?;
            let d = BigInt::from_str(den).map_err(|_| RatError::Parse(s.to_string()))?;
            if d.is_zero() {
                return Err(RatError::ZeroDenominator(s.to_string()));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(2, 3) * rat(3, 2), rat_int(1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            checked_div(&rat_int(1), &rat_int(0)),
            Err(RatError::DivisionByZero)
        );
        assert_eq!(checked_div(&rat(3, 4), &rat(1, 2)), Ok(rat(3, 2)));
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(int_pow(&BigInt::zero(), 0), BigInt::one());
        assert_eq!(rat_pow(&rat_int(0), 0), rat_int(1));
    }

    #[test]
    fn signed_powers() {
        assert_eq!(rat_pow(&rat(2, 3), 2), rat(4, 9));
        assert_eq!(rat_pow(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(rat_pow(&rat(-2, 1), 3), rat_int(-8));
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0", "5", "-3/7", "22/7", "-1"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(parse_rat(&r.to_string()).unwrap(), r);
        }
        // Non-canonical input normalizes.
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rat("1/-2").unwrap(), rat(-1, 2));
    }

    #[test]
    fn parse_rejects_junk() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1/2/3").is_err());
        assert!(parse_rat("1.5").is_err());
    }
}
