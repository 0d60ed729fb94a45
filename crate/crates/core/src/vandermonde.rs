//! Subset enumeration over `{1, ..., m+n}` and exact evaluation of both
//! sides of the complementary Vandermonde subset-sum identity
//!
//! ```text
//! sum over m-subsets X with element sum t of V_X * V_Y
//!     = G(m+1) * G(n+1) * C(mn, t - m(m+1)/2),        Y = complement of X,
//! ```
//!
//! together with the squared variant `sum V_X^2` (a discrete analogue of the
//! gamma-type integrals from random-matrix moments) and the telescoping
//! interleaved-sum identity used in its proof.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::ops::RangeInclusive;
use thiserror::Error;

use crate::exact::{barnes_g, binomial, factorial, rat_int, BigRat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VandermondeError {
    #[error("elements must be strictly increasing")]
    NotStrictlyIncreasing,
    #[error("element {value} outside the ground set 1..={max}")]
    OutOfRange { value: u32, max: u32 },
    #[error("subset must be nonempty")]
    Empty,
}

/// An m-element subset `X` of the ground set `{1, ..., m+n}`, kept strictly
/// increasing, with the complement size `n` recorded so `Y = U - X` is
/// well defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetX {
    elements: Vec<u32>,
    complement_size: u32,
}

impl SubsetX {
    pub fn new(elements: Vec<u32>, complement_size: u32) -> Result<Self, VandermondeError> {
        if elements.is_empty() {
            return Err(VandermondeError::Empty);
        }
        if !elements.windows(2).all(|w| w[0] < w[1]) {
            return Err(VandermondeError::NotStrictlyIncreasing);
        }
        let max = elements.len() as u32 + complement_size;
        let last = *elements.last().unwrap();
        if elements[0] < 1 || last > max {
            return Err(VandermondeError::OutOfRange { value: last, max });
        }
        Ok(SubsetX {
            elements,
            complement_size,
        })
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    /// |X|.
    pub fn m(&self) -> u32 {
        self.elements.len() as u32
    }

    /// |Y| = |U| - |X|.
    pub fn n(&self) -> u32 {
        self.complement_size
    }

    pub fn universe_size(&self) -> u32 {
        self.m() + self.n()
    }

    pub fn sum(&self) -> u64 {
        self.elements.iter().map(|&x| x as u64).sum()
    }

    /// The complement `Y = {1,...,m+n} - X`, strictly increasing.
    pub fn complement(&self) -> Vec<u32> {
        let mut it = self.elements.iter().copied().peekable();
        let mut out = Vec::with_capacity(self.complement_size as usize);
        for v in 1..=self.universe_size() {
            if it.peek() == Some(&v) {
                it.next();
            } else {
                out.push(v);
            }
        }
        out
    }
}

/// The Vandermonde product `prod_{i<j} (x_j - x_i)` of a strictly increasing
/// list; empty and singleton lists give the empty product 1.
pub fn vandermonde(xs: &[i64]) -> Result<BigInt, VandermondeError> {
    if !xs.windows(2).all(|w| w[0] < w[1]) {
        return Err(VandermondeError::NotStrictlyIncreasing);
    }
    let mut acc = BigInt::one();
    for j in 1..xs.len() {
        for i in 0..j {
            acc *= BigInt::from(xs[j] - xs[i]);
        }
    }
    Ok(acc)
}

/// Vandermonde product of a validated subset.
pub fn vandermonde_of(x: &SubsetX) -> BigInt {
    let xs: Vec<i64> = x.elements().iter().map(|&v| v as i64).collect();
    vandermonde(&xs).expect("subset elements are strictly increasing")
}

fn vandermonde_u32(xs: &[u32]) -> BigInt {
    let xs: Vec<i64> = xs.iter().map(|&v| v as i64).collect();
    vandermonde(&xs).expect("strictly increasing by construction")
}

/// The range of element sums an m-subset of `{1,...,m+n}` can take.
pub fn t_range(m: u32, n: u32) -> RangeInclusive<u64> {
    let lo = (m as u64) * (m as u64 + 1) / 2;
    lo..=(lo + (m as u64) * (n as u64))
}

/// All m-element subsets of `{1,...,m+n}` with element sum `t`, in
/// lexicographic order. Prefix sums plus minimal/maximal completion bounds
/// prune the search, so the full range stays fast well past desk scale.
pub fn subsets_with_sum(m: u32, n: u32, t: u64) -> Vec<SubsetX> {
    assert!(m >= 1 && n >= 1, "both block sizes must be positive");
    let mut out = Vec::new();
    if !t_range(m, n).contains(&t) {
        return out;
    }
    let universe = m + n;
    let mut prefix: Vec<u32> = Vec::with_capacity(m as usize);

    fn go(
        universe: u32,
        m: u32,
        n: u32,
        remaining: i64,
        next_min: u32,
        prefix: &mut Vec<u32>,
        out: &mut Vec<SubsetX>,
    ) {
        let left = m as i64 - prefix.len() as i64;
        if left == 0 {
            if remaining == 0 {
                out.push(SubsetX::new(prefix.clone(), n).expect("valid by construction"));
            }
            return;
        }
        for v in next_min..=universe {
            let v64 = v as i64;
            // Smallest achievable completion: v, v+1, ..., v+left-1.
            let min_rest = left * v64 + left * (left - 1) / 2;
            if min_rest > remaining {
                break;
            }
            // Largest achievable completion: v plus the top left-1 values.
            let u = universe as i64;
            let max_tail = (left - 1) * u - (left - 1) * (left - 2) / 2;
            if v64 + max_tail < remaining {
                continue;
            }
            prefix.push(v);
            go(universe, m, n, remaining - v64, v + 1, prefix, out);
            prefix.pop();
        }
    }

    go(universe, m, n, t as i64, 1, &mut prefix, &mut out);
    out
}

/// Left-hand side: `sum V_X * V_Y` over m-subsets with element sum `t`.
/// Zero outside the valid range of `t`.
pub fn identity_lhs(m: u32, n: u32, t: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for x in subsets_with_sum(m, n, t) {
        let vy = vandermonde_u32(&x.complement());
        acc += vandermonde_of(&x) * vy;
    }
    acc
}

/// Right-hand side: `G(m+1) G(n+1) C(mn, t*)` with `t* = t - m(m+1)/2`.
/// The binomial's out-of-range convention makes this total in `t`.
pub fn identity_rhs(m: u32, n: u32, t: u64) -> BigInt {
    let tstar = t as i64 - (m as i64) * (m as i64 + 1) / 2;
    barnes_g(m as u64 + 1) * barnes_g(n as u64 + 1) * binomial((m as u64) * (n as u64), tstar)
}

/// `sum V_X^2` over m-subsets with element sum `t`.
pub fn discrete_gamma(m: u32, n: u32, t: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for x in subsets_with_sum(m, n, t) {
        let v = vandermonde_of(&x);
        acc += &v * &v;
    }
    acc
}

/// Outcome of the interleaved-sum check: the brute-force side, the closed
/// form `V_A / (k-1)!`, and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterleavedSumReport {
    pub lhs: BigRat,
    pub rhs: BigRat,
    pub equal: bool,
}

/// Brute-force check that summing `V_B` over all interleavings
/// `a_1 < b_1 <= a_2 < b_2 <= ... <= a_k` equals `V_A / (k-1)!`.
pub fn interleaved_sum_check(a: &[i64]) -> Result<InterleavedSumReport, VandermondeError> {
    if a.is_empty() {
        return Err(VandermondeError::Empty);
    }
    if !a.windows(2).all(|w| w[0] < w[1]) {
        return Err(VandermondeError::NotStrictlyIncreasing);
    }
    let k = a.len();
    // b_i ranges over (a_i, a_{i+1}]; the ranges are independent and the
    // resulting b's are automatically strictly increasing.
    let mut lhs = BigInt::zero();
    let mut b = vec![0i64; k - 1];
    fn go(a: &[i64], b: &mut Vec<i64>, idx: usize, acc: &mut BigInt) {
        if idx == b.len() {
            *acc += vandermonde(b).expect("interleaved b's are strictly increasing");
            return;
        }
        for v in (a[idx] + 1)..=a[idx + 1] {
            b[idx] = v;
            go(a, b, idx + 1, acc);
        }
    }
    go(a, &mut b, 0, &mut lhs);

    let va = vandermonde(a)?;
    let rhs = BigRat::new(va, factorial(k as u64 - 1));
    let lhs = BigRat::from_integer(lhs);
    let equal = lhs == rhs;
    Ok(InterleavedSumReport { lhs, rhs, equal })
}

/// Lattice estimate of the gamma-type integral: strictly increasing m-tuples
/// from `{1,...,N}` with component sum `round(c N)`, weighted by the squared
/// Vandermonde and normalized by `G(m+1)^2 N^(m^2 - 1)`.
///
/// This is table/demo output: the constraint rounding and lattice
/// normalization are conventions, pinned here only up to self-convergence.
pub fn riemann_gamma_estimate(m: u32, c: &BigRat, lattice: u32) -> BigRat {
    assert!(m >= 1 && lattice >= m, "need N >= m >= 1");
    let n = lattice as i64;
    // round(cN), half away from zero not needed: c > 0 in all uses.
    let target = (c * rat_int(n) + BigRat::new(1.into(), 2.into())).floor();
    let target: i64 = match i64::try_from(target.to_integer()) {
        Ok(v) => v,
        Err(_) => return BigRat::zero(),
    };

    let mut sum = BigInt::zero();
    let mut tuple: Vec<i64> = Vec::with_capacity(m as usize);
    fn go(n: i64, m: usize, remaining: i64, next_min: i64, tuple: &mut Vec<i64>, acc: &mut BigInt) {
        let left = (m - tuple.len()) as i64;
        if left == 0 {
            if remaining == 0 {
                let v = vandermonde(tuple).expect("strictly increasing");
                *acc += &v * &v;
            }
            return;
        }
        for v in next_min..=n {
            let min_rest = left * v + left * (left - 1) / 2;
            if min_rest > remaining {
                break;
            }
            let max_tail = (left - 1) * n - (left - 1) * (left - 2) / 2;
            if v + max_tail < remaining {
                continue;
            }
            tuple.push(v);
            go(n, m, remaining - v, v + 1, tuple, acc);
            tuple.pop();
        }
    }
    go(n, m as usize, target, 1, &mut tuple, &mut sum);

    let g = barnes_g(m as u64 + 1);
    let exponent = (m as u32) * (m as u32) - 1;
    let scale = BigInt::from(n).pow(exponent) * &g * &g;
    BigRat::new(sum, scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use num_traits::Signed;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn vandermonde_values() {
        assert_eq!(vandermonde(&[1, 3, 4]).unwrap(), big(6));
        assert_eq!(vandermonde(&[7]).unwrap(), big(1));
        assert_eq!(vandermonde(&[]).unwrap(), big(1));
        assert_eq!(vandermonde(&[1, 2, 5]).unwrap(), big(12));
        assert!(vandermonde(&[2, 2]).is_err());
        assert!(vandermonde(&[3, 1]).is_err());
    }

    #[test]
    fn subset_validation() {
        assert!(SubsetX::new(vec![1, 3], 1).is_ok());
        assert!(SubsetX::new(vec![3, 1], 1).is_err());
        assert!(SubsetX::new(vec![1, 5], 2).is_err());
        assert!(SubsetX::new(vec![], 2).is_err());
    }

    #[test]
    fn complement_is_sorted_remainder() {
        let x = SubsetX::new(vec![2, 5], 3).unwrap();
        assert_eq!(x.complement(), vec![1, 3, 4]);
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        assert_eq!(
            subsets_with_sum(1, 1, 1)
                .iter()
                .map(|x| x.elements().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![1]]
        );
        assert_eq!(
            subsets_with_sum(2, 2, 5)
                .iter()
                .map(|x| x.elements().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![1, 4], vec![2, 3]]
        );
        assert!(subsets_with_sum(2, 1, 99).is_empty());
    }

    #[test]
    fn enumeration_counts_total_to_choose() {
        for (m, n) in [(2u32, 2u32), (3, 2), (2, 3), (3, 3), (4, 2)] {
            let total: u64 = t_range(m, n)
                .map(|t| subsets_with_sum(m, n, t).len() as u64)
                .sum();
            let choose = binomial((m + n) as u64, m as i64);
            assert_eq!(BigInt::from(total), choose, "m={m} n={n}");
        }
    }

    #[test]
    fn identity_examples() {
        assert_eq!(identity_lhs(1, 1, 1), big(1));
        assert_eq!(identity_lhs(2, 1, 4), big(2));
        assert_eq!(identity_lhs(2, 2, 5), big(6));
        assert_eq!(identity_rhs(1, 1, 1), big(1));
        assert_eq!(identity_rhs(2, 1, 4), big(2));
        assert_eq!(identity_rhs(2, 2, 5), big(6));
        // Out-of-range t is zero on both sides.
        assert_eq!(identity_lhs(2, 2, 99), big(0));
        assert_eq!(identity_rhs(2, 2, 99), big(0));
    }

    #[test]
    fn identity_holds_at_small_scale() {
        for m in 1..=3u32 {
            for n in 1..=3u32 {
                for t in t_range(m, n) {
                    assert_eq!(
                        identity_lhs(m, n, t),
                        identity_rhs(m, n, t),
                        "m={m} n={n} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn complement_symmetry() {
        for m in 1..=3u32 {
            for n in 1..=3u32 {
                let total = ((m + n) as u64) * ((m + n) as u64 + 1) / 2;
                for t in t_range(m, n) {
                    assert_eq!(identity_lhs(m, n, t), identity_lhs(n, m, total - t));
                }
            }
        }
    }

    #[test]
    fn squared_sum_values_and_reflection() {
        assert_eq!(discrete_gamma(1, 1, 1), big(1));
        assert_eq!(discrete_gamma(2, 2, 5), big(10));
        assert_eq!(discrete_gamma(2, 1, 4), big(4));
        for m in 1..=3u32 {
            for n in 1..=3u32 {
                let mirror = (m as u64) * ((m + n) as u64 + 1);
                for t in t_range(m, n) {
                    assert_eq!(discrete_gamma(m, n, t), discrete_gamma(m, n, mirror - t));
                }
            }
        }
    }

    #[test]
    fn interleaved_sum_examples() {
        let r = interleaved_sum_check(&[1, 3]).unwrap();
        assert_eq!(r.lhs, rat(2, 1));
        assert_eq!(r.rhs, rat(2, 1));
        assert!(r.equal);

        let r = interleaved_sum_check(&[5]).unwrap();
        assert_eq!(r.lhs, rat(1, 1));
        assert!(r.equal);

        let r = interleaved_sum_check(&[1, 3, 4]).unwrap();
        assert_eq!(r.lhs, rat(3, 1));
        assert_eq!(r.rhs, rat(3, 1));
        assert!(r.equal);

        assert!(interleaved_sum_check(&[]).is_err());
        assert!(interleaved_sum_check(&[2, 2]).is_err());
    }

    #[test]
    fn lattice_gamma_matches_direct_double_loop() {
        // m = 2, c = 1, N = 4: independent oracle over ordered pairs.
        let n = 4i64;
        let c = rat(1, 1);
        let target = 4i64;
        let mut acc = rat(0, 1);
        for k1 in 1..=n {
            for k2 in 1..=n {
                if k1 + k2 == target {
                    let d = rat(k1, n) - rat(k2, n);
                    acc += &d * &d;
                }
            }
        }
        // Normalize: divide by m! G(3)^2 and by N^{-(m^2-1)} net of the
        // scaled Vandermonde's own N powers (m(m-1) of them).
        let oracle = acc * rat(n, 1).pow(2) / (rat(2, 1) * rat(n, 1).pow(3));
        assert_eq!(riemann_gamma_estimate(2, &c, 4), oracle);
        assert_eq!(riemann_gamma_estimate(2, &c, 4), rat(1, 16));
    }

    #[test]
    fn lattice_gamma_m1_is_unit() {
        for c in [rat(1, 3), rat(1, 2), rat(7, 10)] {
            assert_eq!(riemann_gamma_estimate(1, &c, 10), rat(1, 1));
        }
    }

    #[test]
    fn lattice_gamma_self_convergence() {
        let c = rat(1, 1);
        let coarse = riemann_gamma_estimate(2, &c, 40);
        let fine = riemann_gamma_estimate(2, &c, 400);
        let diff = (&coarse - &fine).abs();
        assert!(diff <= fine.abs() / rat(10, 1), "coarse={coarse} fine={fine}");
    }
}
