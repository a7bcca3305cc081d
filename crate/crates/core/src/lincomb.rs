//! Sparse linear combinations over an exact coefficient ring.
//!
//! `LinComb<B, C>` is the shared representation behind algebra elements,
//! ladder polynomials, and the basis-presented Hopf targets: a finite map
//! from basis monomials to coefficients with no stored zeros.

use crate::coeff::Coefficient;
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<B: Ord, C> {
    terms: BTreeMap<B, C>,
}

impl<B: Ord, C> Default for LinComb<B, C> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone, C: Coefficient> LinComb<B, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single term `c * b` (zero if `c` is zero).
    pub fn term(b: B, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    /// The basis monomial `b` with coefficient one.
    pub fn basis(b: B) -> Self {
        Self::term(b, C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &C)> {
        self.terms.iter()
    }

    /// Coefficient of `b`, zero if absent.
    pub fn coeff_of(&self, b: &B) -> C {
        self.terms.get(b).cloned().unwrap_or_else(C::zero)
    }

    pub fn contains(&self, b: &B) -> bool {
        self.terms.contains_key(b)
    }

    pub fn add_term(&mut self, b: B, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LinComb {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (b, v) in self.iter() {
            out.add_term(b.clone(), v.mul(c));
        }
        out
    }

    /// Linear extension of a basis-level map `b -> combination`.
    pub fn apply_linear<B2: Ord + Clone>(
        &self,
        mut f: impl FnMut(&B) -> LinComb<B2, C>,
    ) -> LinComb<B2, C> {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            for (b2, c2) in f(b).iter() {
                out.add_term(b2.clone(), c.mul(c2));
            }
        }
        out
    }

    /// Bilinear extension of a monomial product `(b1, b2) -> b`.
    pub fn mul_with(&self, other: &Self, mut f: impl FnMut(&B, &B) -> B) -> Self {
        let mut out = Self::zero();
        for (b1, c1) in self.iter() {
            for (b2, c2) in other.iter() {
                out.add_term(f(b1, b2), c1.mul(c2));
            }
        }
        out
    }

    /// Bilinear extension of a monomial product that lands in combinations.
    pub fn mul_via(&self, other: &Self, mut f: impl FnMut(&B, &B) -> LinComb<B, C>) -> Self {
        let mut out = Self::zero();
        for (b1, c1) in self.iter() {
            for (b2, c2) in other.iter() {
                let scaled = c1.mul(c2);
                for (b, c) in f(b1, b2).iter() {
                    out.add_term(b.clone(), c.mul(&scaled));
                }
            }
        }
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (B, C)>) -> Self {
        let mut out = Self::zero();
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }
}
