//! The Hopf algebra presented by generators and relations.
//!
//! Generators are `F` and the grouplike-ish families `phi_lambda`,
//! `psi_lambda` (`lambda != 0`); the relations force every word into the
//! basis `F^a phi_lambda`, `F^a psi_lambda`. The coproduct, counit, and
//! antipode are defined on generators and extended (anti)multiplicatively;
//! the axiom checkers below verify coassociativity, the counit laws, and
//! both antipode convolution laws exactly, and `to_dual` maps the whole
//! presentation onto the evaluation model for comparison.

use std::fmt;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::dual::{DualElem, DualMonomial};
use super::lincomb::LinComb;
use super::Kind;
use crate::exact::{rat, rat_int, rat_pow, BigRat};

/// A basis monomial `F^a phi_lambda` (kind `Phi`) or `F^a psi_lambda`
/// (kind `Psi`); `F^a` alone is `F^a phi_1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HopfMonomial {
    pub a: u32,
    pub kind: Kind,
    pub lam: BigRat,
}

impl HopfMonomial {
    pub fn new(a: u32, kind: Kind, lam: BigRat) -> Self {
        assert!(!num_traits::Zero::is_zero(&lam), "lambda must be nonzero");
        HopfMonomial { a, kind, lam }
    }

    pub fn unit() -> Self {
        Self::new(0, Kind::Phi, rat_int(1))
    }

    fn mul(&self, rhs: &HopfMonomial) -> HopfMonomial {
        HopfMonomial {
            a: self.a + rhs.a,
            kind: self.kind.compose(rhs.kind),
            lam: &self.lam * &rhs.lam,
        }
    }
}

impl fmt::Display for HopfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a == 1 {
            write!(f, "F·")?;
        } else if self.a > 1 {
            write!(f, "F^{}·", self.a)?;
        }
        match self.kind {
            Kind::Phi => write!(f, "phi_{}", self.lam),
            Kind::Psi => write!(f, "psi_{}", self.lam),
        }
    }
}

/// An element of the presented algebra in its canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AbstractElem {
    terms: LinComb<HopfMonomial>,
}

impl AbstractElem {
    pub fn zero() -> Self {
        AbstractElem {
            terms: LinComb::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(HopfMonomial::unit())
    }

    /// The generator `F`.
    pub fn f_gen() -> Self {
        Self::monomial(HopfMonomial::new(1, Kind::Phi, rat_int(1)))
    }

    pub fn phi(lam: BigRat) -> Self {
        Self::monomial(HopfMonomial::new(0, Kind::Phi, lam))
    }

    pub fn psi(lam: BigRat) -> Self {
        Self::monomial(HopfMonomial::new(0, Kind::Psi, lam))
    }

    /// `e_lambda = (phi_lambda + psi_lambda) / 2`.
    pub fn e_lambda(lam: &BigRat) -> Self {
        Self::phi(lam.clone())
            .add(&Self::psi(lam.clone()))
            .scale(&rat(1, 2))
    }

    /// `f_lambda = (phi_lambda - psi_lambda) / 2`.
    pub fn f_lambda(lam: &BigRat) -> Self {
        Self::phi(lam.clone())
            .sub(&Self::psi(lam.clone()))
            .scale(&rat(1, 2))
    }

    pub fn monomial(m: HopfMonomial) -> Self {
        AbstractElem {
            terms: LinComb::singleton(m, BigRat::one()),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (HopfMonomial, BigRat)>>(terms: I) -> Self {
        AbstractElem {
            terms: LinComb::from_terms(terms),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        AbstractElem {
            terms: self.terms.add(&rhs.terms),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        AbstractElem {
            terms: self.terms.sub(&rhs.terms),
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        AbstractElem {
            terms: self.terms.scale(c),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        AbstractElem {
            terms: self.terms.mul_with(&rhs.terms, |a, b| a.mul(b)),
        }
    }

    pub fn coeff(&self, m: &HopfMonomial) -> BigRat {
        self.terms.coeff(m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&HopfMonomial, &BigRat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Comultiplication, extended multiplicatively from the generators:
    /// `D(F) = F (x) 1 + psi_1 (x) F`, and on the grouplike-ish families
    /// the half-sum/half-difference mixing with `lambda` inverted on the
    /// second legs.
    pub fn coproduct(&self) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (m, c) in self.terms.iter() {
            out = out.add(&monomial_coproduct(m).scale(c));
        }
        out
    }

    /// Counit: kills `F`, sends every `phi`/`psi` to 1.
    pub fn counit(&self) -> BigRat {
        let mut acc = rat_int(0);
        for (m, c) in self.terms.iter() {
            if m.a == 0 {
                acc += c;
            }
        }
        acc
    }

    /// Antipode, extended from `S(F) = -psi_1 F` and the generator
    /// formulas; the algebra is commutative, so the anti-homomorphism
    /// property reduces to multiplicativity.
    pub fn antipode(&self) -> AbstractElem {
        let mut out = AbstractElem::zero();
        for (m, c) in self.terms.iter() {
            out = out.add(&monomial_antipode(m).scale(c));
        }
        out
    }

    /// The canonical generator assignment `F -> E`, `phi -> Phi`,
    /// `psi -> Psi` onto the evaluation model, extended linearly.
    pub fn to_dual(&self) -> DualElem {
        DualElem::from_terms(self.terms.iter().map(|(m, c)| {
            (
                DualMonomial::new(m.a, m.kind, m.lam.clone()),
                c.clone(),
            )
        }))
    }
}

impl fmt::Display for AbstractElem {
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

fn delta_f() -> Tensor2 {
    Tensor2::from_terms([
        (
            (
                HopfMonomial::new(1, Kind::Phi, rat_int(1)),
                HopfMonomial::unit(),
            ),
            rat_int(1),
        ),
        (
            (
                HopfMonomial::new(0, Kind::Psi, rat_int(1)),
                HopfMonomial::new(1, Kind::Phi, rat_int(1)),
            ),
            rat_int(1),
        ),
    ])
}

fn delta_kind(kind: Kind, lam: &BigRat) -> Tensor2 {
    let half = rat(1, 2);
    let linv = rat_pow(lam, -1);
    let m = |k: Kind, l: &BigRat| HopfMonomial::new(0, k, l.clone());
    match kind {
        Kind::Phi => Tensor2::from_terms([
            ((m(Kind::Phi, lam), m(Kind::Phi, lam)), half.clone()),
            ((m(Kind::Psi, lam), m(Kind::Phi, lam)), half.clone()),
            ((m(Kind::Phi, lam), m(Kind::Phi, &linv)), half.clone()),
            ((m(Kind::Psi, lam), m(Kind::Phi, &linv)), -half),
        ]),
        Kind::Psi => Tensor2::from_terms([
            ((m(Kind::Phi, lam), m(Kind::Psi, lam)), half.clone()),
            ((m(Kind::Psi, lam), m(Kind::Psi, lam)), half.clone()),
            ((m(Kind::Phi, lam), m(Kind::Psi, &linv)), -half.clone()),
            ((m(Kind::Psi, lam), m(Kind::Psi, &linv)), half),
        ]),
    }
}

fn monomial_coproduct(m: &HopfMonomial) -> Tensor2 {
    let mut acc = delta_kind(m.kind, &m.lam);
    let df = delta_f();
    for _ in 0..m.a {
        acc = acc.mul(&df);
    }
    acc
}

fn monomial_antipode(m: &HopfMonomial) -> AbstractElem {
    let half = rat(1, 2);
    let linv = rat_pow(&m.lam, -1);
    let sign = match m.kind {
        Kind::Phi => half.clone(),
        Kind::Psi => -half.clone(),
    };
    let s_kind = AbstractElem::from_terms([
        (HopfMonomial::new(0, Kind::Phi, linv.clone()), half.clone()),
        (HopfMonomial::new(0, Kind::Psi, linv), half),
        (HopfMonomial::new(0, Kind::Phi, m.lam.clone()), sign.clone()),
        (HopfMonomial::new(0, Kind::Psi, m.lam.clone()), -sign),
    ]);
    // S(F) = -psi_1 F, raised to the a-th power.
    let s_f = AbstractElem::from_terms([(HopfMonomial::new(1, Kind::Psi, rat_int(1)), rat_int(-1))]);
    let mut acc = s_kind;
    for _ in 0..m.a {
        acc = acc.mul(&s_f);
    }
    acc
}

/// Two-fold tensors over the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor2 {
    terms: LinComb<(HopfMonomial, HopfMonomial)>,
}

impl Tensor2 {
    pub fn zero() -> Self {
        Tensor2 {
            terms: LinComb::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = ((HopfMonomial, HopfMonomial), BigRat)>>(
        terms: I,
    ) -> Self {
        Tensor2 {
            terms: LinComb::from_terms(terms),
        }
    }

    /// `a (x) b` for whole elements.
    pub fn outer(a: &AbstractElem, b: &AbstractElem) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in a.iter() {
            for (k2, c2) in b.iter() {
                out.terms.add_term((k1.clone(), k2.clone()), c1 * c2);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Tensor2 {
            terms: self.terms.add(&rhs.terms),
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Tensor2 {
            terms: self.terms.scale(c),
        }
    }

    /// Componentwise product.
    pub fn mul(&self, rhs: &Self) -> Self {
        Tensor2 {
            terms: self
                .terms
                .mul_with(&rhs.terms, |(a1, b1), (a2, b2)| (a1.mul(a2), b1.mul(b2))),
        }
    }

    /// Apply the coproduct to the left leg.
    pub fn coproduct_left(&self) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((l, r), c) in self.terms.iter() {
            for ((l1, l2), d) in monomial_coproduct(l).terms.iter() {
                out.terms
                    .add_term((l1.clone(), l2.clone(), r.clone()), c * d);
            }
        }
        out
    }

    /// Apply the coproduct to the right leg.
    pub fn coproduct_right(&self) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((l, r), c) in self.terms.iter() {
            for ((r1, r2), d) in monomial_coproduct(r).terms.iter() {
                out.terms
                    .add_term((l.clone(), r1.clone(), r2.clone()), c * d);
            }
        }
        out
    }

    /// Collapse `sum c (k1 (x) k2)` to `sum c counit(k1) k2`.
    pub fn counit_left(&self) -> AbstractElem {
        let mut out = AbstractElem::zero();
        for ((l, r), c) in self.terms.iter() {
            if l.a == 0 {
                out = out.add(&AbstractElem::monomial(r.clone()).scale(c));
            }
        }
        out
    }

    /// Collapse `sum c (k1 (x) k2)` to `sum c counit(k2) k1`.
    pub fn counit_right(&self) -> AbstractElem {
        let mut out = AbstractElem::zero();
        for ((l, r), c) in self.terms.iter() {
            if r.a == 0 {
                out = out.add(&AbstractElem::monomial(l.clone()).scale(c));
            }
        }
        out
    }

    /// `m(S (x) id)`: antipode the left leg, then multiply the legs.
    pub fn convolve_antipode_left(&self) -> AbstractElem {
        let mut out = AbstractElem::zero();
        for ((l, r), c) in self.terms.iter() {
            let s = monomial_antipode(l);
            out = out.add(&s.mul(&AbstractElem::monomial(r.clone())).scale(c));
        }
        out
    }

    /// `m(id (x) S)`: antipode the right leg, then multiply the legs.
    pub fn convolve_antipode_right(&self) -> AbstractElem {
        let mut out = AbstractElem::zero();
        for ((l, r), c) in self.terms.iter() {
            let s = monomial_antipode(r);
            out = out.add(&AbstractElem::monomial(l.clone()).mul(&s).scale(c));
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(HopfMonomial, HopfMonomial), &BigRat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

/// Three-fold tensors, used only to compare the two coassociativity routes.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor3 {
    terms: LinComb<(HopfMonomial, HopfMonomial, HopfMonomial)>,
}

impl Tensor3 {
    pub fn zero() -> Self {
        Tensor3 {
            terms: LinComb::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

/// `(id (x) D) D(b) = (D (x) id) D(b)`.
pub fn coassociativity_holds(b: &AbstractElem) -> bool {
    let delta = b.coproduct();
    delta.coproduct_right() == delta.coproduct_left()
}

/// `(counit (x) id) D(b) = b = (id (x) counit) D(b)`.
pub fn counit_laws_hold(b: &AbstractElem) -> bool {
    let delta = b.coproduct();
    delta.counit_left() == *b && delta.counit_right() == *b
}

/// `m(S (x) id) D(b) = counit(b) 1 = m(id (x) S) D(b)`.
pub fn antipode_laws_hold(b: &AbstractElem) -> bool {
    let delta = b.coproduct();
    let target = AbstractElem::one().scale(&b.counit());
    delta.convolve_antipode_left() == target && delta.convolve_antipode_right() == target
}

/// First axiom failure over a sample, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub index: usize,
    pub axiom: &'static str,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "element #{} fails {}", self.index, self.axiom)
    }
}

/// Runs coassociativity, both counit laws, and both antipode convolution
/// laws on every element of the sample, exactly.
pub fn axiom_suite(sample: &[AbstractElem]) -> Result<(), AxiomFailure> {
    for (index, b) in sample.iter().enumerate() {
        if !coassociativity_holds(b) {
            return Err(AxiomFailure {
                index,
                axiom: "coassociativity",
            });
        }
        if !counit_laws_hold(b) {
            return Err(AxiomFailure {
                index,
                axiom: "counit laws",
            });
        }
        if !antipode_laws_hold(b) {
            return Err(AxiomFailure {
                index,
                axiom: "antipode convolution laws",
            });
        }
    }
    Ok(())
}

/// The generator sample: `F`, `phi`, `psi`, and the half-sum/half-difference
/// combinations at a spread of rational lambdas.
pub fn default_generator_sample() -> Vec<AbstractElem> {
    let lambdas = [rat(2, 1), rat(1, 2), rat(-1, 1), rat(3, 5)];
    let mut sample = vec![AbstractElem::one(), AbstractElem::f_gen()];
    for l in &lambdas {
        sample.push(AbstractElem::phi(l.clone()));
        sample.push(AbstractElem::psi(l.clone()));
        sample.push(AbstractElem::e_lambda(l));
        sample.push(AbstractElem::f_lambda(l));
    }
    sample
}

/// Deterministic sample of basis monomials `F^a k_lambda` with `a <= max_a`
/// and `lambda` drawn from the given pool.
pub fn random_monomials(
    seed: u64,
    count: usize,
    max_a: u32,
    lambdas: &[BigRat],
) -> Vec<AbstractElem> {
    assert!(!lambdas.is_empty(), "need at least one lambda");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = rng.gen_range(0..=max_a);
            let kind = if rng.gen_bool(0.5) { Kind::Phi } else { Kind::Psi };
            let lam = lambdas[rng.gen_range(0..lambdas.len())].clone();
            AbstractElem::monomial(HopfMonomial::new(a, kind, lam))
        })
        .collect()
}
