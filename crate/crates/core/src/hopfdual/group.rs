//! Words and finite linear combinations in the infinite dihedral group
//! algebra. The group is generated by `g` (infinite order) and `x` with
//! `x^2 = 1` and `x g x = g^-1`; every word normalizes to `g^i x^j`.

use std::fmt;

use super::lincomb::LinComb;
use crate::exact::BigRat;
use num_traits::One;

/// A normalized group word `g^i x^j` with `j` a bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupWord {
    /// Exponent of `g`.
    pub g: i64,
    /// Whether the reflection `x` is present.
    pub x: bool,
}

impl GroupWord {
    pub const IDENTITY: GroupWord = GroupWord { g: 0, x: false };

    pub fn new(g: i64, x: bool) -> Self {
        GroupWord { g, x }
    }

    /// `(g^i x^j)(g^i' x^j') = g^(i + (-1)^j i') x^(j xor j')`.
    pub fn mul(&self, rhs: &GroupWord) -> GroupWord {
        let flipped = if self.x { -rhs.g } else { rhs.g };
        GroupWord {
            g: self.g + flipped,
            x: self.x ^ rhs.x,
        }
    }

    /// `(g^i)^-1 = g^-i`; reflections are involutions: `(g^i x)^-1 = g^i x`.
    pub fn inverse(&self) -> GroupWord {
        if self.x {
            *self
        } else {
            GroupWord::new(-self.g, false)
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.g, self.x) {
            (0, false) => write!(f, "1"),
            (0, true) => write!(f, "x"),
            (i, false) => write!(f, "g^{i}"),
            (i, true) => write!(f, "g^{i}·x"),
        }
    }
}

/// A finite rational linear combination of group words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupAlgElem {
    terms: LinComb<GroupWord>,
}

impl GroupAlgElem {
    pub fn zero() -> Self {
        GroupAlgElem {
            terms: LinComb::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_word(GroupWord::IDENTITY)
    }

    pub fn from_word(w: GroupWord) -> Self {
        GroupAlgElem {
            terms: LinComb::singleton(w, BigRat::one()),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (GroupWord, BigRat)>>(terms: I) -> Self {
        GroupAlgElem {
            terms: LinComb::from_terms(terms),
        }
    }

    /// The binomial `g - lambda`.
    pub fn g_minus(lambda: &BigRat) -> Self {
        Self::from_terms([
            (GroupWord::new(1, false), BigRat::one()),
            (GroupWord::IDENTITY, -lambda.clone()),
        ])
    }

    /// A Laurent polynomial in `g`: coefficient list over exponents.
    pub fn poly_in_g<I: IntoIterator<Item = (i64, BigRat)>>(coeffs: I) -> Self {
        Self::from_terms(
            coeffs
                .into_iter()
                .map(|(e, c)| (GroupWord::new(e, false), c)),
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        GroupAlgElem {
            terms: self.terms.add(&rhs.terms),
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        GroupAlgElem {
            terms: self.terms.scale(c),
        }
    }

    /// Convolution product induced by the group law.
    pub fn mul(&self, rhs: &Self) -> Self {
        GroupAlgElem {
            terms: self.terms.mul_with(&rhs.terms, |a, b| a.mul(b)),
        }
    }

    /// Right multiplication by a single word.
    pub fn mul_word(&self, w: &GroupWord) -> Self {
        GroupAlgElem {
            terms: LinComb::from_terms(self.terms.iter().map(|(k, c)| (k.mul(w), c.clone()))),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn coeff(&self, w: &GroupWord) -> BigRat {
        self.terms.coeff(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupWord, &BigRat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_zero()
    }
}
