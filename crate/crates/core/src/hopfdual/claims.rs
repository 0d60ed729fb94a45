//! Quotient-side machinery: vanishing of the functionals on cofinite
//! ideals, the evaluation matrix and its closed-form determinant, dual
//! bases of finite quotients, and the symbolic determinant identity that
//! underwrites their nonsingularity.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::dual::DualMonomial;
use super::group::{GroupAlgElem, GroupWord};
use super::Kind;
use crate::exact::{
    barnes_g, binomial, int_pow, laurent_det, rat_det, rat_pow, rat_rank, BigRat, LaurentPoly,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClaimsError {
    #[error("lambda = {0} is degenerate here (0 and +/-1 are excluded)")]
    DegenerateLambda(BigRat),
    #[error("the zero polynomial generates the zero ideal, not a cofinite one")]
    ZeroPolynomial,
}

/// `sum_(i=0..t) (-1)^(t-i) C(t,i) i^s`, i.e. `t!` times the Stirling
/// number of the second kind `S(s,t)`: zero for `s < t` and `t!` at `s = t`.
pub fn stirling_sum(s: u32, t: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..=t {
        let term = binomial(t as u64, i as i64) * int_pow(&BigInt::from(i), s);
        if (t - i) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Vanishing of `E^s K_lambda` on the ideal generated by
/// `(g - lambda)^r (g - 1/lambda)^r`.
///
/// Expands the generator, then checks `E^s K_lambda` against
/// `g^k p(g) x^l` for `k` in `[-5, 5]` and both values of `l`, plus the
/// base moment conditions at every power up to `s`. True exactly when all
/// of them vanish, which holds iff `s < r`.
pub fn ideal_vanishing_check(kind: Kind, s: u32, lam: &BigRat, r: u32) -> bool {
    assert!(!lam.is_zero(), "lambda must be nonzero");
    let linv = rat_pow(lam, -1);
    let p = GroupAlgElem::g_minus(lam)
        .pow(r)
        .mul(&GroupAlgElem::g_minus(&linv).pow(r));

    // Base conditions: sum a_i i^s' lambda^i = 0 for every s' <= s.
    for sp in 0..=s {
        let functional = DualMonomial::new(sp, kind, lam.clone());
        let mut acc = BigRat::zero();
        for (w, c) in p.iter() {
            acc += c * functional.eval_word(w);
        }
        if !acc.is_zero() {
            return false;
        }
    }

    // Window: translates g^k p(g) x^l stay annihilated.
    let functional = DualMonomial::new(s, kind, lam.clone());
    for k in -5..=5i64 {
        for l in [false, true] {
            let elem = p.mul_word(&GroupWord::new(k, l));
            let mut acc = BigRat::zero();
            for (w, c) in elem.iter() {
                acc += c * functional.eval_word(w);
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

/// The `2r x 2r` evaluation matrix with rows `j = 0..2r-1` and columns
/// `j^s lambda^j` (`s < r`) followed by `j^s lambda^-j` (`s < r`); its
/// determinant equals `G(r+1)^2 (1/lambda - lambda)^(r^2)`.
///
/// `lambda` in `{0, 1, -1}` collapses the two column blocks and is
/// rejected.
pub fn evaluation_matrix_det(lam: &BigRat, r: u32) -> Result<BigRat, ClaimsError> {
    if lam.is_zero() || lam == &BigRat::one() || lam == &(-BigRat::one()) {
        return Err(ClaimsError::DegenerateLambda(lam.clone()));
    }
    assert!(r >= 1);
    let size = 2 * r as usize;
    let mut m = Vec::with_capacity(size);
    for j in 0..size as i64 {
        let mut row = Vec::with_capacity(size);
        let pow_pos = rat_pow(lam, j);
        let pow_neg = rat_pow(lam, -j);
        for s in 0..r {
            let js = BigRat::from_integer(int_pow(&BigInt::from(j), s));
            row.push(&js * &pow_pos);
        }
        for s in 0..r {
            let js = BigRat::from_integer(int_pow(&BigInt::from(j), s));
            row.push(&js * &pow_neg);
        }
        m.push(row);
    }
    Ok(rat_det(&m).expect("matrix is square by construction"))
}

/// Rank report for the listed quotient functionals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub rank: usize,
    pub expected: usize,
    /// Set when the functional family collapses (always at `lambda = +/-1`).
    pub degenerate: bool,
}

/// Evaluates the `4r` functionals `E^s Phi_lambda, E^s Phi_(1/lambda),
/// E^s Psi_lambda, E^s Psi_(1/lambda)` (`s < r`) on the quotient basis
/// `g^i x^j` (`0 <= i < 2r`) and reports the exact rank, expected `4r`.
pub fn quotient_dual_rank(lam: &BigRat, r: u32) -> RankReport {
    assert!(!lam.is_zero(), "lambda must be nonzero");
    assert!(r >= 1);
    let linv = rat_pow(lam, -1);
    let mut functionals = Vec::with_capacity(4 * r as usize);
    for s in 0..r {
        functionals.push(DualMonomial::new(s, Kind::Phi, lam.clone()));
        functionals.push(DualMonomial::new(s, Kind::Phi, linv.clone()));
        functionals.push(DualMonomial::new(s, Kind::Psi, lam.clone()));
        functionals.push(DualMonomial::new(s, Kind::Psi, linv.clone()));
    }
    let mut basis = Vec::with_capacity(4 * r as usize);
    for i in 0..2 * r as i64 {
        basis.push(GroupWord::new(i, false));
        basis.push(GroupWord::new(i, true));
    }
    let matrix: Vec<Vec<BigRat>> = functionals
        .iter()
        .map(|f| basis.iter().map(|w| f.eval_word(w)).collect())
        .collect();
    let rank = rat_rank(&matrix);
    let expected = 4 * r as usize;
    RankReport {
        rank,
        expected,
        degenerate: rank < expected,
    }
}

/// Dimension and monomial basis of the quotient by the two-sided ideal a
/// nonzero polynomial `p(g)` generates: `dim = 2 deg(p)` with basis
/// `g^i x^j`, `0 <= i < deg(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientProbe {
    pub dim: usize,
    pub basis: Vec<GroupWord>,
}

/// `p` is the coefficient list of `p(g)` in ascending degree.
pub fn cofinite_ideal_probe(p: &[BigRat]) -> Result<QuotientProbe, ClaimsError> {
    let deg = match p.iter().rposition(|c| !c.is_zero()) {
        Some(d) => d,
        None => return Err(ClaimsError::ZeroPolynomial),
    };
    let mut basis = Vec::with_capacity(2 * deg);
    for i in 0..deg as i64 {
        basis.push(GroupWord::new(i, false));
        basis.push(GroupWord::new(i, true));
    }
    Ok(QuotientProbe {
        dim: 2 * deg,
        basis,
    })
}

/// Result of the symbolic determinant identity check at size `2m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetIdentityReport {
    pub det: LaurentPoly,
    pub expected: LaurentPoly,
    pub matches: bool,
}

/// Builds the `2m x 2m` matrix whose row `j` holds `j^s x^j` and
/// `j^s x^-j` (`s < m`), takes its exact Laurent determinant, and compares
/// with the closed form `G(m+1)^2 (x^-1 - x)^(m^2)`.
pub fn symbolic_det_check(m: u32) -> DetIdentityReport {
    assert!(m >= 1);
    let size = 2 * m as usize;
    let mut matrix = Vec::with_capacity(size);
    for j in 0..size as i64 {
        let mut row = Vec::with_capacity(size);
        for s in 0..m {
            let js = BigRat::from_integer(int_pow(&BigInt::from(j), s));
            row.push(LaurentPoly::monomial(j, js));
        }
        for s in 0..m {
            let js = BigRat::from_integer(int_pow(&BigInt::from(j), s));
            row.push(LaurentPoly::monomial(-j, js));
        }
        matrix.push(row);
    }
    let det = laurent_det(&matrix).expect("matrix is square by construction");

    let g = barnes_g(m as u64 + 1);
    let base = &LaurentPoly::x_inv() - &LaurentPoly::x();
    let expected = base
        .pow(m * m)
        .scale(&BigRat::from_integer(&g * &g));
    let matches = det == expected;
    DetIdentityReport {
        det,
        expected,
        matches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn stirling_triangle() {
        assert_eq!(stirling_sum(1, 2), BigInt::zero());
        assert_eq!(stirling_sum(2, 2), BigInt::from(2));
        assert_eq!(stirling_sum(0, 0), BigInt::one());
        for t in 0..=6u32 {
            for s in 0..t {
                assert_eq!(stirling_sum(s, t), BigInt::zero(), "s={s} t={t}");
            }
            let mut t_fact = BigInt::one();
            for i in 2..=t as u64 {
                t_fact *= BigInt::from(i);
            }
            assert_eq!(stirling_sum(t, t), t_fact, "t={t}");
        }
    }

    #[test]
    fn vanishing_below_the_multiplicity() {
        assert!(ideal_vanishing_check(Kind::Phi, 0, &rat(2, 1), 1));
        assert!(ideal_vanishing_check(Kind::Psi, 1, &rat(3, 1), 2));
        assert!(ideal_vanishing_check(Kind::Phi, 1, &rat(3, 2), 2));
        // At s = r the moment survives.
        assert!(!ideal_vanishing_check(Kind::Phi, 1, &rat(2, 1), 1));
        assert!(!ideal_vanishing_check(Kind::Psi, 2, &rat(3, 1), 2));
    }

    #[test]
    fn evaluation_determinant_small() {
        assert_eq!(evaluation_matrix_det(&rat(2, 1), 1).unwrap(), rat(-3, 2));
        assert_eq!(evaluation_matrix_det(&rat(2, 1), 2).unwrap(), rat(81, 16));
        assert!(evaluation_matrix_det(&rat(1, 1), 1).is_err());
        assert!(evaluation_matrix_det(&rat(-1, 1), 2).is_err());
        assert!(evaluation_matrix_det(&rat(0, 1), 1).is_err());
    }

    #[test]
    fn evaluation_determinant_closed_form() {
        for (lam, r) in [(rat(2, 1), 1u32), (rat(3, 2), 2), (rat(-2, 1), 2), (rat(5, 7), 3)] {
            let det = evaluation_matrix_det(&lam, r).unwrap();
            let g = barnes_g(r as u64 + 1);
            let base = rat_pow(&lam, -1) - &lam;
            let expected = BigRat::from_integer(&g * &g) * rat_pow(&base, (r * r) as i64);
            assert_eq!(det, expected, "lambda={lam} r={r}");
        }
    }

    #[test]
    fn quotient_rank_is_full_off_the_boundary() {
        assert_eq!(
            quotient_dual_rank(&rat(2, 1), 1),
            RankReport {
                rank: 4,
                expected: 4,
                degenerate: false
            }
        );
        let report = quotient_dual_rank(&rat(3, 2), 2);
        assert_eq!(report.rank, 8);
        assert!(!report.degenerate);
    }

    #[test]
    fn quotient_rank_degenerates_at_one() {
        let report = quotient_dual_rank(&rat(1, 1), 1);
        assert!(report.rank < 4);
        assert!(report.degenerate);
    }

    #[test]
    fn ideal_probe() {
        // (g-2)(g-1/2) = 1 - 5/2 g + g^2.
        let p = vec![rat(1, 1), rat(-5, 2), rat(1, 1)];
        let probe = cofinite_ideal_probe(&p).unwrap();
        assert_eq!(probe.dim, 4);
        assert_eq!(probe.basis.len(), 4);
        // g - 1.
        let p = vec![rat(-1, 1), rat(1, 1)];
        assert_eq!(cofinite_ideal_probe(&p).unwrap().dim, 2);
        assert!(cofinite_ideal_probe(&[rat(0, 1)]).is_err());
        assert!(cofinite_ideal_probe(&[]).is_err());
    }

    #[test]
    fn symbolic_determinant_matches_small() {
        let r1 = symbolic_det_check(1);
        assert!(r1.matches);
        assert_eq!(r1.det, &LaurentPoly::x_inv() - &LaurentPoly::x());
        let r2 = symbolic_det_check(2);
        assert!(r2.matches, "det={} expected={}", r2.det, r2.expected);
        let r3 = symbolic_det_check(3);
        assert!(r3.matches);
    }
}
