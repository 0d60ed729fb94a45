//! Functionals on the dihedral group algebra.
//!
//! The basis monomials are `E^s K_lambda` with `K` either `Phi` or `Psi`;
//! on a word `g^i x^j` such a monomial evaluates to `i^s lambda^i`, with an
//! extra `(-1)^j` for the `Psi` family (and `0^0 = 1`). Because group
//! elements are group-like, the product of functionals is pointwise on
//! words, which is what `pointwise_product_check` verifies for the
//! structure-constant product implemented here.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::group::{GroupAlgElem, GroupWord};
use super::lincomb::LinComb;
use super::Kind;
use crate::exact::{int_pow, rat_int, rat_pow, BigRat};

/// A basis functional `E^s Phi_lambda` or `E^s Psi_lambda`, `lambda != 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DualMonomial {
    pub s: u32,
    pub kind: Kind,
    pub lam: BigRat,
}

impl DualMonomial {
    pub fn new(s: u32, kind: Kind, lam: BigRat) -> Self {
        assert!(!num_traits::Zero::is_zero(&lam), "lambda must be nonzero");
        DualMonomial { s, kind, lam }
    }

    /// Evaluation on a single word.
    pub fn eval_word(&self, w: &GroupWord) -> BigRat {
        let power = BigRat::from_integer(int_pow(
            &BigInt::from(w.g),
            self.s,
        ));
        let weight = rat_pow(&self.lam, w.g);
        let sign = match (self.kind, w.x) {
            (Kind::Psi, true) => rat_int(-1),
            _ => rat_int(1),
        };
        power * weight * sign
    }

    fn mul(&self, rhs: &DualMonomial) -> DualMonomial {
        DualMonomial {
            s: self.s + rhs.s,
            kind: self.kind.compose(rhs.kind),
            lam: &self.lam * &rhs.lam,
        }
    }
}

impl fmt::Display for DualMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s == 1 {
            write!(f, "E·")?;
        } else if self.s > 1 {
            write!(f, "E^{}·", self.s)?;
        }
        match self.kind {
            Kind::Phi => write!(f, "Phi_{}", self.lam),
            Kind::Psi => write!(f, "Psi_{}", self.lam),
        }
    }
}

/// A finite linear combination of dual basis monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DualElem {
    terms: LinComb<DualMonomial>,
}

impl DualElem {
    pub fn zero() -> Self {
        DualElem {
            terms: LinComb::new(),
        }
    }

    /// The multiplicative identity `Phi_1` (constant 1 on the group).
    pub fn one() -> Self {
        Self::monomial(DualMonomial::new(0, Kind::Phi, rat_int(1)))
    }

    /// The skew-primitive counter `E` (reads off the `g`-exponent).
    pub fn e_functional() -> Self {
        Self::monomial(DualMonomial::new(1, Kind::Phi, rat_int(1)))
    }

    pub fn phi(lam: BigRat) -> Self {
        Self::monomial(DualMonomial::new(0, Kind::Phi, lam))
    }

    pub fn psi(lam: BigRat) -> Self {
        Self::monomial(DualMonomial::new(0, Kind::Psi, lam))
    }

    pub fn monomial(m: DualMonomial) -> Self {
        DualElem {
            terms: LinComb::singleton(m, BigRat::one()),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (DualMonomial, BigRat)>>(terms: I) -> Self {
        DualElem {
            terms: LinComb::from_terms(terms),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        DualElem {
            terms: self.terms.add(&rhs.terms),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        DualElem {
            terms: self.terms.sub(&rhs.terms),
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        DualElem {
            terms: self.terms.scale(c),
        }
    }

    /// Structure-constant product `(E^s K_l)(E^t K'_l') = E^(s+t) (KK')_(ll')`.
    pub fn mul(&self, rhs: &Self) -> Self {
        DualElem {
            terms: self.terms.mul_with(&rhs.terms, |a, b| a.mul(b)),
        }
    }

    pub fn eval_word(&self, w: &GroupWord) -> BigRat {
        let mut acc = rat_int(0);
        for (m, c) in self.terms.iter() {
            acc += c * m.eval_word(w);
        }
        acc
    }

    /// Linear extension of the evaluation pairing.
    pub fn eval(&self, u: &GroupAlgElem) -> BigRat {
        let mut acc = rat_int(0);
        for (w, c) in u.iter() {
            acc += c * self.eval_word(w);
        }
        acc
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DualMonomial, &BigRat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }
}

impl fmt::Display for DualElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})·{m}")?;
            }
        }
        Ok(())
    }
}

/// All words `g^i x^j` with `|i| <= window`, both bits.
pub fn word_window(window: i64) -> Vec<GroupWord> {
    (-window..=window)
        .flat_map(|i| [GroupWord::new(i, false), GroupWord::new(i, true)])
        .collect()
}

/// The dual product must be pointwise on group words: checks
/// `(fh)(w) = f(w) h(w)` for every word in the window.
pub fn pointwise_product_check(f: &DualElem, h: &DualElem, window: i64) -> bool {
    let product = f.mul(h);
    word_window(window)
        .iter()
        .all(|w| product.eval_word(w) == f.eval_word(w) * h.eval_word(w))
}

/// One of the three algebra generators on the dual side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualGenerator {
    E,
    Phi(BigRat),
    Psi(BigRat),
}

impl DualGenerator {
    pub fn as_elem(&self) -> DualElem {
        match self {
            DualGenerator::E => DualElem::e_functional(),
            DualGenerator::Phi(l) => DualElem::phi(l.clone()),
            DualGenerator::Psi(l) => DualElem::psi(l.clone()),
        }
    }
}

impl fmt::Display for DualGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualGenerator::E => write!(f, "E"),
            DualGenerator::Phi(l) => write!(f, "Phi_{l}"),
            DualGenerator::Psi(l) => write!(f, "Psi_{l}"),
        }
    }
}

/// A finite tensor over pairs of dual monomials, enough to state the
/// generator coproducts and pair them against pairs of words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DualTensor {
    terms: LinComb<(DualMonomial, DualMonomial)>,
}

impl DualTensor {
    pub fn from_terms<I: IntoIterator<Item = ((DualMonomial, DualMonomial), BigRat)>>(
        terms: I,
    ) -> Self {
        DualTensor {
            terms: LinComb::from_terms(terms),
        }
    }

    /// Pair against `(w, v)`: sum of `c * left(w) * right(v)`.
    pub fn pair(&self, w: &GroupWord, v: &GroupWord) -> BigRat {
        let mut acc = rat_int(0);
        for ((l, r), c) in self.terms.iter() {
            acc += c * l.eval_word(w) * r.eval_word(v);
        }
        acc
    }
}

/// The coproducts of the three generators:
/// `E -> E (x) 1 + Psi_1 (x) E`,
/// `Phi_l -> (Phi_l + Psi_l)/2 (x) Phi_l + (Phi_l - Psi_l)/2 (x) Phi_(1/l)`,
/// `Psi_l -> (Phi_l + Psi_l)/2 (x) Psi_l - (Phi_l - Psi_l)/2 (x) Psi_(1/l)`.
pub fn generator_coproduct(gen: &DualGenerator) -> DualTensor {
    let one = rat_int(1);
    let half = BigRat::new(1.into(), 2.into());
    let m = |s: u32, kind: Kind, lam: &BigRat| DualMonomial::new(s, kind, lam.clone());
    match gen {
        DualGenerator::E => DualTensor::from_terms([
            ((m(1, Kind::Phi, &one), m(0, Kind::Phi, &one)), one.clone()),
            ((m(0, Kind::Psi, &one), m(1, Kind::Phi, &one)), one.clone()),
        ]),
        DualGenerator::Phi(l) => {
            let linv = rat_pow(l, -1);
            DualTensor::from_terms([
                ((m(0, Kind::Phi, l), m(0, Kind::Phi, l)), half.clone()),
                ((m(0, Kind::Psi, l), m(0, Kind::Phi, l)), half.clone()),
                ((m(0, Kind::Phi, l), m(0, Kind::Phi, &linv)), half.clone()),
                ((m(0, Kind::Psi, l), m(0, Kind::Phi, &linv)), -half),
            ])
        }
        DualGenerator::Psi(l) => {
            let linv = rat_pow(l, -1);
            DualTensor::from_terms([
                ((m(0, Kind::Phi, l), m(0, Kind::Psi, l)), half.clone()),
                ((m(0, Kind::Psi, l), m(0, Kind::Psi, l)), half.clone()),
                ((m(0, Kind::Phi, l), m(0, Kind::Psi, &linv)), -half.clone()),
                ((m(0, Kind::Psi, l), m(0, Kind::Psi, &linv)), half),
            ])
        }
    }
}

/// The antipodes of the three generators:
/// `S(E) = -Psi_1 E`,
/// `S(Phi_l) = (Phi_(1/l) + Psi_(1/l))/2 + (Phi_l - Psi_l)/2`,
/// `S(Psi_l) = (Phi_(1/l) + Psi_(1/l))/2 - (Phi_l - Psi_l)/2`.
pub fn generator_antipode(gen: &DualGenerator) -> DualElem {
    let one = rat_int(1);
    let half = BigRat::new(1.into(), 2.into());
    match gen {
        DualGenerator::E => DualElem::from_terms([(
            DualMonomial::new(1, Kind::Psi, one),
            rat_int(-1),
        )]),
        DualGenerator::Phi(l) | DualGenerator::Psi(l) => {
            let linv = rat_pow(l, -1);
            let sign = if matches!(gen, DualGenerator::Phi(_)) {
                half.clone()
            } else {
                -half.clone()
            };
            DualElem::from_terms([
                (DualMonomial::new(0, Kind::Phi, linv.clone()), half.clone()),
                (DualMonomial::new(0, Kind::Psi, linv), half),
                (DualMonomial::new(0, Kind::Phi, l.clone()), sign.clone()),
                (DualMonomial::new(0, Kind::Psi, l.clone()), -sign),
            ])
        }
    }
}

/// Coproduct against multiplication: `gen(w v)` must equal the pairing of
/// the stated coproduct with `(w, v)` for all words in the window.
pub fn coproduct_pairing_check(gen: &DualGenerator, window: i64) -> bool {
    let elem = gen.as_elem();
    let delta = generator_coproduct(gen);
    let words = word_window(window);
    words.iter().all(|w| {
        words
            .iter()
            .all(|v| elem.eval_word(&w.mul(v)) == delta.pair(w, v))
    })
}

/// Antipode against inversion: `S(gen)(w) = gen(w^-1)` on the window.
pub fn antipode_pairing_check(gen: &DualGenerator, window: i64) -> bool {
    let elem = gen.as_elem();
    let s = generator_antipode(gen);
    word_window(window)
        .iter()
        .all(|w| s.eval_word(w) == elem.eval_word(&w.inverse()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn evaluation_examples() {
        let e = DualElem::e_functional();
        assert_eq!(e.eval_word(&GroupWord::new(5, true)), rat(5, 1));

        let psi1 = DualElem::psi(rat(1, 1));
        assert_eq!(psi1.eval_word(&GroupWord::new(3, true)), rat(-1, 1));

        let phi = DualElem::phi(rat(7, 3));
        assert_eq!(phi.eval_word(&GroupWord::IDENTITY), rat(1, 1));

        // Negative g-exponents invert lambda.
        assert_eq!(phi.eval_word(&GroupWord::new(-1, false)), rat(3, 7));
    }

    #[test]
    fn product_examples() {
        let phi2 = DualElem::phi(rat(2, 1));
        let phi_half = DualElem::phi(rat(1, 2));
        assert_eq!(phi2.mul(&phi_half), DualElem::one());

        let psi2 = DualElem::psi(rat(2, 1));
        let psi3 = DualElem::psi(rat(3, 1));
        assert_eq!(psi2.mul(&psi3), DualElem::phi(rat(6, 1)));

        // (E Phi_2)(E Psi_3) = E^2 Psi_6
        let a = DualElem::e_functional().mul(&DualElem::phi(rat(2, 1)));
        let b = DualElem::e_functional().mul(&DualElem::psi(rat(3, 1)));
        let expected = DualElem::monomial(DualMonomial::new(2, Kind::Psi, rat(6, 1)));
        assert_eq!(a.mul(&b), expected);
    }

    #[test]
    fn products_are_pointwise() {
        assert!(pointwise_product_check(
            &DualElem::one(),
            &DualElem::one(),
            5
        ));
        assert!(pointwise_product_check(
            &DualElem::e_functional(),
            &DualElem::psi(rat(2, 1)),
            10
        ));
        let f = DualElem::monomial(DualMonomial::new(2, Kind::Phi, rat(2, 3)));
        let h = DualElem::monomial(DualMonomial::new(1, Kind::Psi, rat(3, 2)));
        assert!(pointwise_product_check(&f, &h, 10));
    }

    #[test]
    fn product_is_commutative() {
        let f = DualElem::e_functional().mul(&DualElem::psi(rat(5, 7)));
        let h = DualElem::phi(rat(-2, 1)).add(&DualElem::e_functional());
        assert_eq!(f.mul(&h), h.mul(&f));
    }

    #[test]
    fn coproduct_pairing_for_generators() {
        assert!(coproduct_pairing_check(&DualGenerator::E, 10));
        assert!(coproduct_pairing_check(&DualGenerator::Phi(rat(2, 1)), 8));
        assert!(coproduct_pairing_check(&DualGenerator::Phi(rat(1, 1)), 6));
        assert!(coproduct_pairing_check(&DualGenerator::Psi(rat(5, 7)), 6));
    }

    #[test]
    fn antipode_pairing_for_generators() {
        assert!(antipode_pairing_check(&DualGenerator::E, 10));
        assert!(antipode_pairing_check(&DualGenerator::Phi(rat(2, 1)), 8));
        assert!(antipode_pairing_check(&DualGenerator::Psi(rat(-3, 1)), 8));
    }

    #[test]
    fn antipode_values_on_words() {
        // S(Phi_l) evaluates to l^-i on g^i and to l^i on g^i x.
        let s = generator_antipode(&DualGenerator::Phi(rat(2, 1)));
        assert_eq!(s.eval_word(&GroupWord::new(3, false)), rat(1, 8));
        assert_eq!(s.eval_word(&GroupWord::new(3, true)), rat(8, 1));
        // S(E) at (i, 1) is i.
        let se = generator_antipode(&DualGenerator::E);
        assert_eq!(se.eval_word(&GroupWord::new(4, true)), rat(4, 1));
        assert_eq!(se.eval_word(&GroupWord::new(4, false)), rat(-4, 1));
    }
}
