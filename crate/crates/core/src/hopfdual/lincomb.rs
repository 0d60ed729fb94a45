//! Finite formal linear combinations over exact rationals, the shared
//! backbone of the group algebra, the dual functionals, and the tensors.

use num_traits::Zero;
use std::collections::BTreeMap;

use crate::exact::BigRat;

/// Canonical finite linear combination: equal keys merged, zero
/// coefficients dropped, keys ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, BigRat>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn singleton(key: K, coeff: BigRat) -> Self {
        let mut out = Self::new();
        out.add_term(key, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, BigRat)>>(terms: I) -> Self {
        let mut out = Self::new();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, key: K, coeff: BigRat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Bilinear product with an arbitrary key-level multiplication.
    pub fn mul_with<F: Fn(&K, &K) -> K>(&self, rhs: &Self, key_mul: F) -> Self {
        let mut out = Self::new();
        for (k1, c1) in self.iter() {
            for (k2, c2) in rhs.iter() {
                out.add_term(key_mul(k1, k2), c1 * c2);
            }
        }
        out
    }

    /// Linear map on keys that may fan out into combinations.
    pub fn flat_map<J: Ord + Clone, F: Fn(&K) -> LinComb<J>>(&self, f: F) -> LinComb<J> {
        let mut out = LinComb::new();
        for (k, c) in self.iter() {
            for (j, d) in f(k).iter() {
                out.add_term(j.clone(), c * d);
            }
        }
        out
    }

    pub fn coeff(&self, key: &K) -> BigRat {
        self.terms.get(key).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigRat)> {
        self.terms.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    #[test]
    fn terms_merge_and_cancel() {
        let mut c = LinComb::new();
        c.add_term("a", rat_int(2));
        c.add_term("a", rat_int(-2));
        assert!(c.is_zero());
        c.add_term("b", rat_int(1));
        c.add_term("b", rat_int(1));
        assert_eq!(c.coeff(&"b"), rat_int(2));
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn bilinear_product() {
        let a = LinComb::from_terms([(1i32, rat_int(2)), (2, rat_int(3))]);
        let b = LinComb::from_terms([(10i32, rat_int(1)), (20, rat_int(-1))]);
        let prod = a.mul_with(&b, |x, y| x + y);
        assert_eq!(prod.coeff(&11), rat_int(2));
        assert_eq!(prod.coeff(&21), rat_int(-2));
        assert_eq!(prod.coeff(&12), rat_int(3));
        assert_eq!(prod.coeff(&22), rat_int(-3));
    }
}
