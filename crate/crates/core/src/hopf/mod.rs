//! The algebra of rooted-tree forests with its parametrized coproduct family.
//!
//! Elements are sparse linear combinations of canonical forests. The grafting
//! operator `λ` sends a basis forest to the tree obtained by planting it
//! under a new root. For any pair of twisting maps `σ1`, `σ2` there is a
//! unique algebra map `Δ` with
//!
//! ```text
//! Δ(λ(a)) = (σ1 ⊗ λ + λ ⊗ σ2)(Δ(a)),    Δ(1) = 1 ⊗ 1,
//! ```
//!
//! computed here by exactly that recursion, memoized per canonical tree. The
//! classical cut coproduct lives in [`oracle`] as a physically separate code
//! path and is used to cross-check the recursion at `(identity, counit-unit)`.

pub mod oracle;

use crate::coeff::{Coefficient, Rational};
use crate::lincomb::LinComb;
use crate::report::{CheckReport, Witness};
use crate::trees::{self, make_tree, root_branches, Forest, ParseError, Tree};
use serde_json::json;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("convex twisting requires alpha + beta = 1, got alpha = {alpha}, beta = {beta}")]
    NonConvex { alpha: String, beta: String },
    #[error("coproduct of {forest} is not connected-graded at term {term}; antipode recursion cannot proceed")]
    NotConnectedGraded { forest: String, term: String },
}

/// A general member of the algebra: a finite linear combination of forests.
pub type Element<C> = LinComb<Forest, C>;

/// The multiplicative unit: the empty forest with coefficient one.
pub fn unit<C: Coefficient>() -> Element<C> {
    LinComb::basis(Forest::empty())
}

pub fn scalar<C: Coefficient>(c: C) -> Element<C> {
    LinComb::term(Forest::empty(), c)
}

pub fn forest_element<C: Coefficient>(f: Forest) -> Element<C> {
    LinComb::basis(f)
}

pub fn tree_element<C: Coefficient>(t: Tree) -> Element<C> {
    LinComb::basis(Forest::single(t))
}

/// Bilinear extension of the forest product; commutative and associative with
/// unit [`unit`].
pub fn product<C: Coefficient>(a: &Element<C>, b: &Element<C>) -> Element<C> {
    a.mul_with(b, Forest::mul)
}

/// The grafting operator: linear, sends a basis forest `F` to the single tree
/// with child forest `F`. Raises degree by exactly one on homogeneous input.
pub fn lambda_op<C: Coefficient>(a: &Element<C>) -> Element<C> {
    a.apply_linear(|f| LinComb::basis(Forest::single(make_tree(f))))
}

/// The augmentation: the coefficient of the empty forest.
pub fn counit<C: Coefficient>(a: &Element<C>) -> C {
    a.coeff_of(&Forest::empty())
}

/// Largest forest degree appearing in `a` (zero for scalars and zero).
pub fn element_degree<C: Coefficient>(a: &Element<C>) -> usize {
    a.iter().map(|(f, _)| f.degree()).max().unwrap_or(0)
}

/// The declared generator alphabet for the generator-decorated algebra.
#[derive(Clone, Debug, Default)]
pub struct GeneratorSet {
    names: BTreeSet<String>,
}

impl GeneratorSet {
    pub fn new(names: impl IntoIterator<Item = impl Into<String>>) -> Self {
        GeneratorSet {
            names: names.into_iter().map(Into::into).collect(),
        }
    }

    pub fn contains(&self, name: &str) -> bool {
        self.names.contains(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    /// The degree-zero monomial carrying one loose generator.
    pub fn element<C: Coefficient>(&self, name: &str) -> Result<Element<C>, HopfError> {
        if !self.contains(name) {
            return Err(HopfError::UnknownGenerator(name.to_string()));
        }
        Ok(LinComb::basis(Forest::generator(name)))
    }
}

// ---- twisting maps ----

/// A grading-diagonal linear endomorphism used to deform the coproduct.
///
/// The shipped kinds all satisfy the counit and comultiplicativity conditions
/// the coproduct family needs; `IdentityPlusUnit` deliberately does not and
/// is kept as a negative control for the validator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twisting<C: Coefficient> {
    Identity,
    /// `a ↦ ε(a)·1`.
    CounitUnit,
    /// `α·id + β·(unit∘counit)` with `α + β = 1`.
    Convex { alpha: C, beta: C },
    /// Diagonal on the forest basis: `F ↦ q^degree(F) · F`.
    QPower { q: C },
    /// `F ↦ F + 1` on every basis forest; fails the counit condition.
    IdentityPlusUnit,
}

impl<C: Coefficient> Twisting<C> {
    pub fn convex(alpha: C, beta: C) -> Result<Self, HopfError> {
        if alpha.add(&beta) != C::one() {
            return Err(HopfError::NonConvex {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
            });
        }
        Ok(Twisting::Convex { alpha, beta })
    }

    pub fn q_power(q: C) -> Self {
        Twisting::QPower { q }
    }

    pub fn apply_forest(&self, f: &Forest) -> Element<C> {
        match self {
            Twisting::Identity => LinComb::basis(f.clone()),
            Twisting::CounitUnit => {
                if f.is_empty() {
                    unit()
                } else {
                    LinComb::zero()
                }
            }
            Twisting::Convex { alpha, beta } => {
                let mut out = LinComb::term(f.clone(), alpha.clone());
                if f.is_empty() {
                    out.add_term(Forest::empty(), beta.clone());
                }
                out
            }
            Twisting::QPower { q } => LinComb::term(f.clone(), q.pow(f.degree())),
            Twisting::IdentityPlusUnit => {
                let mut out = LinComb::basis(f.clone());
                out.add_term(Forest::empty(), C::one());
                out
            }
        }
    }

    pub fn apply(&self, a: &Element<C>) -> Element<C> {
        a.apply_linear(|f| self.apply_forest(f))
    }

    pub fn label(&self) -> String {
        match self {
            Twisting::Identity => "identity".to_string(),
            Twisting::CounitUnit => "counit-unit".to_string(),
            Twisting::Convex { alpha, beta } => format!("convex({alpha},{beta})"),
            Twisting::QPower { q } => format!("q-power({q})"),
            Twisting::IdentityPlusUnit => "identity-plus-unit".to_string(),
        }
    }
}

/// Linear extension of a twisting map to elements.
pub fn twist_apply<C: Coefficient>(sigma: &Twisting<C>, a: &Element<C>) -> Element<C> {
    sigma.apply(a)
}

// ---- tensor elements ----

/// A finite linear combination of `arity`-tuples of forests: the values of
/// the coproduct (arity 2), of iterated coproducts (arity 3), and of cochains
/// generally. The componentwise forest product makes each arity an algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement<C: Coefficient> {
    arity: usize,
    terms: BTreeMap<Vec<Forest>, C>,
}

impl<C: Coefficient> TensorElement<C> {
    pub fn zero(arity: usize) -> Self {
        TensorElement {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn unit(arity: usize) -> Self {
        let mut out = Self::zero(arity);
        out.add_term(vec![Forest::empty(); arity], C::one());
        out
    }

    pub fn single(key: Vec<Forest>) -> Self {
        let mut out = Self::zero(key.len());
        out.add_term(key, C::one());
        out
    }

    pub fn pair(left: Forest, right: Forest, c: C) -> Self {
        let mut out = Self::zero(2);
        out.add_term(vec![left, right], c);
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Forest>, &C)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, key: &[Forest]) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, key: Vec<Forest>, c: C) {
        assert_eq!(key.len(), self.arity, "tensor key arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        assert_eq!(self.arity, other.arity);
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v.mul(c));
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        TensorElement {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.arity);
        for (k, v) in self.iter() {
            out.add_term(k.clone(), v.mul(c));
        }
        out
    }

    /// Componentwise forest product — the algebra structure of the tensor
    /// power.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = Self::zero(self.arity);
        for (k1, c1) in self.iter() {
            for (k2, c2) in other.iter() {
                let key: Vec<Forest> = k1.iter().zip(k2).map(|(a, b)| a.mul(b)).collect();
                out.add_term(key, c1.mul(c2));
            }
        }
        out
    }

    pub fn from_element(e: &Element<C>) -> Self {
        let mut out = Self::zero(1);
        for (f, c) in e.iter() {
            out.add_term(vec![f.clone()], c.clone());
        }
        out
    }

    pub fn slot_as_element(&self) -> Element<C> {
        assert_eq!(self.arity, 1);
        LinComb::from_terms(self.iter().map(|(k, c)| (k[0].clone(), c.clone())))
    }

    /// Linear extension of a map applied in one slot. `f` must return tensors
    /// of uniform arity `produced`; the slot is replaced by that many slots.
    pub fn splice_slot(
        &self,
        slot: usize,
        produced: usize,
        mut f: impl FnMut(&Forest) -> TensorElement<C>,
    ) -> TensorElement<C> {
        assert!(slot < self.arity, "slot out of range");
        let mut out = TensorElement::zero(self.arity - 1 + produced);
        for (key, c) in self.iter() {
            let image = f(&key[slot]);
            assert_eq!(image.arity, produced, "splice image arity mismatch");
            for (sub, sc) in image.iter() {
                let mut new_key = Vec::with_capacity(out.arity);
                new_key.extend(key[..slot].iter().cloned());
                new_key.extend(sub.iter().cloned());
                new_key.extend(key[slot + 1..].iter().cloned());
                out.add_term(new_key, c.mul(sc));
            }
        }
        out
    }

    pub fn twist_slot(&self, slot: usize, sigma: &Twisting<C>) -> Self {
        self.splice_slot(slot, 1, |f| TensorElement::from_element(&sigma.apply_forest(f)))
    }

    pub fn lambda_slot(&self, slot: usize) -> Self {
        self.splice_slot(slot, 1, |f| {
            TensorElement::single(vec![Forest::single(make_tree(f))])
        })
    }

    pub fn key_total_degree(key: &[Forest]) -> usize {
        key.iter().map(Forest::degree).sum()
    }

    /// Drop all terms of total degree greater than `cap`.
    pub fn truncate(&self, cap: usize) -> Self {
        let mut out = Self::zero(self.arity);
        for (k, c) in self.iter() {
            if Self::key_total_degree(k) <= cap {
                out.add_term(k.clone(), c.clone());
            }
        }
        out
    }
}

// ---- the coproduct family ----

/// The coproduct `Δ_{σ1,σ2}`, memoized per canonical tree. Construct one per
/// thread of work; results are identical regardless of call order.
pub struct Coproduct<C: Coefficient> {
    sigma1: Twisting<C>,
    sigma2: Twisting<C>,
    memo: HashMap<Tree, TensorElement<C>>,
}

impl<C: Coefficient> Coproduct<C> {
    pub fn new(sigma1: Twisting<C>, sigma2: Twisting<C>) -> Self {
        Coproduct {
            sigma1,
            sigma2,
            memo: HashMap::new(),
        }
    }

    pub fn sigma1(&self) -> &Twisting<C> {
        &self.sigma1
    }

    pub fn sigma2(&self) -> &Twisting<C> {
        &self.sigma2
    }

    pub fn pair_label(&self) -> String {
        format!("({}, {})", self.sigma1.label(), self.sigma2.label())
    }

    pub fn of_element(&mut self, a: &Element<C>) -> TensorElement<C> {
        let mut out = TensorElement::zero(2);
        for (f, c) in a.iter() {
            let df = self.of_forest(f);
            out.add_scaled(&df, c);
        }
        out
    }

    /// Multiplicative on forests: `Δ(F·F') = Δ(F)·Δ(F')`, `Δ(1) = 1⊗1`, and
    /// loose generators are primitive.
    pub fn of_forest(&mut self, f: &Forest) -> TensorElement<C> {
        let mut acc = TensorElement::unit(2);
        for t in f.trees() {
            let dt = self.of_tree(t);
            acc = acc.mul(&dt);
        }
        for g in f.loose_generators() {
            acc = acc.mul(&primitive_pair(g));
        }
        acc
    }

    /// On a tree `T = λ(F)`: `Δ(T) = (σ1 ⊗ λ + λ ⊗ σ2)(Δ(F))`.
    pub fn of_tree(&mut self, t: &Tree) -> TensorElement<C> {
        if let Some(v) = self.memo.get(t) {
            return v.clone();
        }
        let branches = root_branches(t);
        let d = self.of_forest(&branches);
        let sigma1 = self.sigma1.clone();
        let sigma2 = self.sigma2.clone();
        let left = d.twist_slot(0, &sigma1).lambda_slot(1);
        let right = d.lambda_slot(0).twist_slot(1, &sigma2);
        let out = left.add(&right);
        self.memo.insert(t.clone(), out.clone());
        out
    }
}

/// `1 ⊗ g + g ⊗ 1` for a loose generator.
fn primitive_pair<C: Coefficient>(name: &str) -> TensorElement<C> {
    let g = Forest::generator(name);
    let mut out = TensorElement::zero(2);
    out.add_term(vec![Forest::empty(), g.clone()], C::one());
    out.add_term(vec![g, Forest::empty()], C::one());
    out
}

/// One-shot coproduct without a reusable memo.
pub fn coproduct<C: Coefficient>(
    a: &Element<C>,
    sigma1: &Twisting<C>,
    sigma2: &Twisting<C>,
) -> TensorElement<C> {
    Coproduct::new(sigma1.clone(), sigma2.clone()).of_element(a)
}

// ---- twisting validation ----

/// Check `εσ = ε` and `Δσ = (σ⊗σ)Δ` on every basis forest of degree at most
/// `max_degree`, against the coproduct context `cop`. Failures are reported,
/// not raised.
pub fn validate_twisting<C: Coefficient>(
    sigma: &Twisting<C>,
    cop: &mut Coproduct<C>,
    max_degree: usize,
) -> CheckReport {
    let mut report = CheckReport::new(
        format!(
            "twisting {}: counit and comultiplicativity against Δ_{}",
            sigma.label(),
            cop.pair_label()
        ),
        max_degree,
    );
    for f in trees::enumerate_forests(max_degree) {
        let image = sigma.apply_forest(&f);
        let eps_sigma = counit(&image);
        let eps = if f.is_empty() { C::one() } else { C::zero() };
        report.tally(eps_sigma == eps, || {
            Witness::new(format!("εσ on {f}"), eps_sigma.to_string(), eps.to_string())
        });

        let lhs = cop.of_element(&image);
        let rhs = cop.of_forest(&f).twist_slot(0, sigma).twist_slot(1, sigma);
        report.tally(lhs == rhs, || {
            Witness::new(format!("Δσ vs (σ⊗σ)Δ on {f}"), lhs.to_string(), rhs.to_string())
        });
    }
    report
}

// ---- antipode ----

/// Antipode by the connected-graded convolution recursion
/// `S(F) = −Σ S(F') · F''` over the coproduct terms `F' ⊗ F''` with
/// `F'' ≠ 1`. Requires the coproduct to preserve the grading (true for the
/// shipped twisting kinds); a violating term is reported as an error.
pub fn antipode<C: Coefficient>(
    a: &Element<C>,
    cop: &mut Coproduct<C>,
) -> Result<Element<C>, HopfError> {
    let mut memo: HashMap<Forest, Element<C>> = HashMap::new();
    let mut out = LinComb::zero();
    for (f, c) in a.iter() {
        let s = antipode_forest(f, cop, &mut memo)?;
        out = out.add(&s.scale(c));
    }
    Ok(out)
}

fn antipode_forest<C: Coefficient>(
    f: &Forest,
    cop: &mut Coproduct<C>,
    memo: &mut HashMap<Forest, Element<C>>,
) -> Result<Element<C>, HopfError> {
    if f.is_empty() {
        return Ok(unit());
    }
    if let Some(v) = memo.get(f) {
        return Ok(v.clone());
    }
    let delta = cop.of_forest(f);
    let mut acc: Element<C> = LinComb::zero();
    let mut top_seen = false;
    for (key, c) in delta.iter() {
        let (f1, f2) = (&key[0], &key[1]);
        let term = || format!("{f1}⊗{f2}");
        if f1.content() + f2.content() != f.content() {
            return Err(HopfError::NotConnectedGraded {
                forest: f.code().to_string(),
                term: term(),
            });
        }
        if f2.is_empty() {
            // counit law forces the full-degree slice to be exactly F ⊗ 1
            if f1 != f || !c.is_one() {
                return Err(HopfError::NotConnectedGraded {
                    forest: f.code().to_string(),
                    term: term(),
                });
            }
            top_seen = true;
        } else {
            let s1 = antipode_forest(f1, cop, memo)?;
            let piece = product(&s1, &forest_element(f2.clone()));
            acc = acc.add(&piece.scale(c));
        }
    }
    if !top_seen {
        return Err(HopfError::NotConnectedGraded {
            forest: f.code().to_string(),
            term: format!("{f}⊗1 missing"),
        });
    }
    let s = acc.neg();
    memo.insert(f.clone(), s.clone());
    Ok(s)
}

// ---- parsing ----

/// Parse a linear combination of forests, e.g. `2*[[]] + 1/3*[][] - 1`.
/// Coefficients are rational literals; a bare forest has coefficient one.
pub fn parse_element<C: Coefficient>(s: &str) -> Result<Element<C>, ParseError> {
    let bytes = s.as_bytes();
    let mut pos = 0usize;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut out: Element<C> = LinComb::zero();
    let mut first = true;
    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            if first {
                return Err(ParseError {
                    offset: pos,
                    message: "empty input".to_string(),
                });
            }
            break;
        }
        let mut negative = false;
        if first {
            if bytes[pos] == b'-' {
                negative = true;
                pos += 1;
                skip_ws(&mut pos);
            }
        } else {
            match bytes[pos] {
                b'+' => pos += 1,
                b'-' => {
                    negative = true;
                    pos += 1;
                }
                other => {
                    return Err(ParseError {
                        offset: pos,
                        message: format!("expected '+' or '-', found '{}'", other as char),
                    })
                }
            }
            skip_ws(&mut pos);
        }
        first = false;

        let (coeff, forest) = parse_term(s, &mut pos)?;
        let coeff = C::from_rational(&coeff);
        out.add_term(forest, if negative { coeff.neg() } else { coeff });
    }
    Ok(out)
}

fn parse_term(s: &str, pos: &mut usize) -> Result<(Rational, Forest), ParseError> {
    let bytes = s.as_bytes();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut coeff = Rational::one();
    if bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
        let start = *pos;
        while bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
            *pos += 1;
        }
        if bytes.get(*pos) == Some(&b'/') {
            *pos += 1;
            if !bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
                return Err(ParseError {
                    offset: *pos,
                    message: "expected denominator digits".to_string(),
                });
            }
            while bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
                *pos += 1;
            }
        }
        let literal = &s[start..*pos];
        coeff = literal.parse().map_err(|e| ParseError {
            offset: start,
            message: format!("{e}"),
        })?;
        skip_ws(pos);
        if bytes.get(*pos) == Some(&b'*') {
            *pos += 1;
            skip_ws(pos);
        } else {
            // a bare number is a scalar term
            return Ok((coeff, Forest::empty()));
        }
    }
    let forest = parse_forest_prefix(s, pos)?;
    Ok((coeff, forest))
}

fn parse_forest_prefix(s: &str, pos: &mut usize) -> Result<Forest, ParseError> {
    let bytes = s.as_bytes();
    if bytes.get(*pos) == Some(&b'1') {
        *pos += 1;
        return Ok(Forest::empty());
    }
    let mut trees_acc = Vec::new();
    let mut gens = Vec::new();
    let mut any = false;
    loop {
        match bytes.get(*pos) {
            Some(b'[') => {
                let (t, next) = trees::parse_tree_prefix(s, *pos)?;
                trees_acc.push(t);
                *pos = next;
                any = true;
            }
            Some(b'{') => {
                let (g, next) = trees::parse_generator_token(s, *pos)?;
                gens.push(g);
                *pos = next;
                any = true;
            }
            _ => break,
        }
    }
    if !any {
        return Err(ParseError {
            offset: *pos,
            message: "expected a forest ('[', '{' or '1')".to_string(),
        });
    }
    Ok(Forest::from_parts(trees_acc, gens))
}

// ---- display & serialization ----

/// Render a sum of `(monomial, coefficient)` pieces with sign-aware joining.
/// `mul_sep` separates a non-unit coefficient from its monomial.
pub(crate) fn format_sum<'a, C: Coefficient + 'a>(
    pieces: impl Iterator<Item = (String, &'a C)>,
    mul_sep: &str,
) -> String {
    let mut out = String::new();
    let mut first = true;
    for (mono, c) in pieces {
        let cs = c.to_string();
        let (negative, magnitude) = match cs.strip_prefix('-') {
            Some(rest) if !rest.contains('+') && !rest.contains('-') => (true, rest.to_string()),
            _ => (false, cs),
        };
        let needs_parens =
            magnitude.contains('+') || magnitude.contains('-') || magnitude.contains('*');
        let coeff_part = if magnitude == "1" {
            None
        } else if needs_parens {
            Some(format!("({magnitude})"))
        } else {
            Some(magnitude)
        };
        let body = match (coeff_part, mono.as_str()) {
            (None, _) => mono,
            (Some(cp), "1") => cp,
            (Some(cp), _) => format!("{cp}{mul_sep}{mono}"),
        };
        if first {
            if negative {
                out.push('-');
            }
            out.push_str(&body);
            first = false;
        } else {
            out.push_str(if negative { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<C: Coefficient> fmt::Display for LinComb<Forest, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_sum(
            self.iter().map(|(b, c)| (b.code().to_string(), c)),
            "·",
        ))
    }
}

impl<C: Coefficient> fmt::Display for TensorElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_sum(
            self.iter().map(|(k, c)| {
                let mono = k
                    .iter()
                    .map(|f| f.code().to_string())
                    .collect::<Vec<_>>()
                    .join("⊗");
                (mono, c)
            }),
            "·",
        ))
    }
}

/// `{"terms": [{"coeff": ..., "forest": ...}]}`, terms sorted by forest
/// encoding.
pub fn element_to_json<C: Coefficient>(a: &Element<C>) -> serde_json::Value {
    json!({
        "terms": a
            .iter()
            .map(|(f, c)| json!({"coeff": c.to_string(), "forest": f.code()}))
            .collect::<Vec<_>>()
    })
}

/// Arity-2 tensors as `{"terms": [{"coeff", "left", "right"}]}` in canonical
/// term order.
pub fn tensor2_to_json<C: Coefficient>(t: &TensorElement<C>) -> serde_json::Value {
    assert_eq!(t.arity(), 2);
    json!({
        "terms": t
            .iter()
            .map(|(k, c)| json!({"coeff": c.to_string(), "left": k[0].code(), "right": k[1].code()}))
            .collect::<Vec<_>>()
    })
}
