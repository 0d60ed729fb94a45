//! Exact integer combinatorics: factorials, the superfactorial product,
//! binomial coefficients, and ranged power sums.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::rational::int_pow;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RangeError {
    #[error("power sum requires a <= b, got a={a}, b={b}")]
    InvalidRange { a: i64, b: i64 },
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= BigInt::from(j);
    }
    acc
}

/// The superfactorial `G(k) = (k-2)! (k-3)! ... 1!` with the empty-product
/// convention `G(1) = G(2) = 1`.
pub fn barnes_g(k: u64) -> BigInt {
    assert!(k >= 1, "barnes_g requires k >= 1");
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for j in 1..k.saturating_sub(1) {
        fact *= BigInt::from(j);
        acc *= &fact;
    }
    acc
}

/// `C(n, k)`, zero whenever `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// `sum_{a < c <= b} c^j` with the `0^0 = 1` convention.
pub fn power_sum(j: u32, a: i64, b: i64) -> Result<BigInt, RangeError> {
    if a > b {
        return Err(RangeError::InvalidRange { a, b });
    }
    let mut acc = BigInt::zero();
    for c in (a + 1)..=b {
        acc += int_pow(&BigInt::from(c), j);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn barnes_small_values() {
        assert_eq!(barnes_g(1), BigInt::one());
        assert_eq!(barnes_g(2), BigInt::one());
        assert_eq!(barnes_g(3), BigInt::one());
        assert_eq!(barnes_g(4), BigInt::from(2));
        assert_eq!(barnes_g(5), BigInt::from(12));
        assert_eq!(barnes_g(6), BigInt::from(288));
    }

    #[test]
    fn barnes_recurrence() {
        // G(k+1) = G(k) * (k-1)!
        for k in 2..=8u64 {
            assert_eq!(barnes_g(k + 1), barnes_g(k) * factorial(k - 1));
        }
    }

    #[test]
    fn binomial_values_and_conventions() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(7, 0), BigInt::one());
        assert_eq!(binomial(1, 2), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(50, 25), "126410606437752".parse().unwrap());
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(1, 0, 3).unwrap(), BigInt::from(6));
        assert_eq!(power_sum(0, 2, 5).unwrap(), BigInt::from(3));
        assert_eq!(power_sum(2, 1, 4).unwrap(), BigInt::from(29));
        // Empty range sums to zero; 0^0 counts as 1.
        assert_eq!(power_sum(3, 5, 5).unwrap(), BigInt::zero());
        assert_eq!(power_sum(0, -1, 0).unwrap(), BigInt::one());
        assert!(power_sum(1, 3, 2).is_err());
    }

    #[test]
    fn power_sum_splits_at_zero() {
        for a in 0..=6i64 {
            for b in a..=6 {
                for j in 0..=5u32 {
                    let whole = power_sum(j, 0, b).unwrap();
                    let head = power_sum(j, 0, a).unwrap();
                    assert_eq!(power_sum(j, a, b).unwrap(), whole - head);
                }
            }
        }
    }
}
