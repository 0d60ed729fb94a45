//! Laurent polynomials over exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{parse_rat, BigRat};

/// A Laurent polynomial `sum c_e x^e` with exact rational coefficients and
/// signed integer exponents.
///
/// The representation is canonical: zero coefficients are never stored, so
/// two values are equal iff their coefficient maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    /// Constant polynomial; the zero constant yields the empty map.
    pub fn constant(c: BigRat) -> Self {
        Self::monomial(0, c)
    }

    /// `c * x^exp`.
    pub fn monomial(exp: i64, c: BigRat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(1, BigRat::one())
    }

    /// The inverse indeterminate `x^-1`.
    pub fn x_inv() -> Self {
        Self::monomial(-1, BigRat::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRat)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigRat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigRat {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRat)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiply by `x^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e + shift, v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder (or the divisor is zero).
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Shift both operands into ordinary polynomials, long-divide, shift back.
        let a = self.min_exp().unwrap();
        let b = divisor.min_exp().unwrap();
        let deg_n = (self.max_exp().unwrap() - a) as usize;
        let deg_d = (divisor.max_exp().unwrap() - b) as usize;
        if deg_n < deg_d {
            return None;
        }
        let mut num: Vec<BigRat> = vec![BigRat::zero(); deg_n + 1];
        for (e, c) in self.terms() {
            num[(e - a) as usize] = c.clone();
        }
        let mut den: Vec<BigRat> = vec![BigRat::zero(); deg_d + 1];
        for (e, c) in divisor.terms() {
            den[(e - b) as usize] = c.clone();
        }
        let lead = den[deg_d].clone();
        let mut quot: Vec<BigRat> = vec![BigRat::zero(); deg_n - deg_d + 1];
        for i in (0..quot.len()).rev() {
            let q = &num[deg_d + i] / &lead;
            if !q.is_zero() {
                for (j, d) in den.iter().enumerate() {
                    let delta = &q * d;
                    num[i + j] -= delta;
                }
                quot[i] = q;
            }
        }
        if num.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + a - b, c)),
        ))
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// Wire format: one JSON object mapping exponent strings to "p/q" coefficient
// strings, e.g. {"-1":"1","1":"-1"}. Round-trips exactly.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in self.terms() {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from exponent strings to rational strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<LaurentPoly, A::Error> {
                let mut poly = LaurentPoly::zero();
                let mut seen = std::collections::BTreeSet::new();
                while let Some((key, value)) = access.next_entry::<String, String>()? {
                    let exp: i64 = key
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad exponent `{key}`")))?;
                    if !seen.insert(exp) {
                        return Err(de::Error::custom(format!("duplicate exponent {exp}")));
                    }
                    let coeff = parse_rat(&value)
                        .map_err(|e| de::Error::custom(format!("bad coefficient: {e}")))?;
                    poly.add_term(exp, coeff);
                }
                Ok(poly)
            }
        }

        deserializer.deserialize_map(PolyVisitor)
    }
}
