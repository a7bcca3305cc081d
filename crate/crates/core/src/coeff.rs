//! Exact coefficient arithmetic: arbitrary-precision rationals and bivariate
//! polynomials in the formal parameters `q1`, `q2`.
//!
//! Everything here is exact; there is no floating point anywhere in the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
}

/// The common interface of the coefficient rings the algebra is built over.
///
/// Implemented by [`Rational`] (a field) and [`BivariatePoly`] (a commutative
/// ring). All values are canonical, so `==` is decidable structural equality.
pub trait Coefficient: Clone + PartialEq + Eq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn from_rational(r: &Rational) -> Self;
    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }
    fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Arbitrary-precision rational, always reduced, denominator always positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Construct `numer/denom`. Panics if `denom == 0`; use [`Rational::checked_div`]
    /// for fallible division.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "rational denominator must be nonzero");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Exact division; division by zero is reported, never panics.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CoeffError> {
        if rhs.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rational(-self.0.clone())
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl fmt::Display for Rational {
    /// `p/q`, or just `p` when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CoeffError::InvalidRational(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let numer = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let denom = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

/// Sparse polynomial in `q1` and `q2` with rational coefficients.
///
/// Keys are exponent pairs `(i, j)` for `q1^i * q2^j`; zero coefficients are
/// never stored, so `==` is decidable equality of polynomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePoly {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// The variable `q1`.
    pub fn q1() -> Self {
        Self::monomial(Rational::from_int(1), 1, 0)
    }

    /// The variable `q2`.
    pub fn q2() -> Self {
        Self::monomial(Rational::from_int(1), 0, 1)
    }

    pub fn monomial(c: Rational, e1: u32, e2: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e1, e2), c);
        }
        BivariatePoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn accumulate(&mut self, key: (u32, u32), c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Coefficient::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Exact evaluation at `q1 = v1`, `q2 = v2`.
    pub fn substitute(&self, v1: &Rational, v2: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            let term = c.mul(&v1.pow(i as usize)).mul(&v2.pow(j as usize));
            acc = acc.add(&term);
        }
        acc
    }
}

impl Coefficient for BivariatePoly {
    fn zero() -> Self {
        BivariatePoly::default()
    }
    fn one() -> Self {
        Self::constant(Rational::from_int(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(Coefficient::is_one)
                .unwrap_or(false)
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            out.accumulate(key, c);
        }
        out
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = BivariatePoly::default();
        for (&(a1, a2), ca) in &self.terms {
            for (&(b1, b2), cb) in &rhs.terms {
                out.accumulate((a1 + b1, a2 + b2), &ca.mul(cb));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        BivariatePoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, c.neg()))
                .collect(),
        }
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }
}

impl fmt::Display for BivariatePoly {
    /// Sum of `c*q1^i*q2^j` terms with zero exponents omitted, ordered by
    /// ascending total degree and then descending `q1` exponent, so that e.g.
    /// `q1 + q2` and `q1^2 + q1*q2` print in the familiar order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&(u32, u32), &Rational)> = self.terms.iter().collect();
        ordered.sort_by_key(|((i, j), _)| (i + j, std::cmp::Reverse(*i)));
        for (idx, (&(i, j), c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mag = c.abs();
            let mut vars = String::new();
            for (name, e) in [("q1", i), ("q2", j)] {
                if e == 0 {
                    continue;
                }
                if !vars.is_empty() {
                    vars.push('*');
                }
                vars.push_str(name);
                if e > 1 {
                    vars.push_str(&format!("^{e}"));
                }
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag}*{vars}")?;
            }
        }
        Ok(())
    }
}
