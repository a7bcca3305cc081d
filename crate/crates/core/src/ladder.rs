//! The ladder (linear-tree) Hopf algebra and its embedding/retraction.
//!
//! The polynomial algebra on `x1, x2, ...` carries the coproduct
//! `Δ(x_n) = Σ_{i=0..n} x_i ⊗ x_{n-i}` (with `x_0 = 1`), extended as an
//! algebra map. The embedding `j` identifies `x_n` with the n-node ladder
//! tree; the retraction `r` is the unique algebra map with `r∘λ = ᾱ∘r`,
//! where `ᾱ` sends `1 ↦ x_1` and shifts every generator index by one on
//! positive-degree monomials. `r ∘ j = id`, but `r` does not commute with
//! coproducts.

use crate::coeff::Coefficient;
use crate::hopf::{Coproduct, Element, TensorElement};
use crate::lincomb::LinComb;
use crate::trees::{root_branches, Forest, Tree};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LadderError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("{0} is not in the ladder subalgebra image")]
    NotLadderImage(String),
}

/// A monomial in `x1, x2, ...`: a finite map from generator index to
/// exponent. The grading is the sum of indices counted with multiplicity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct LadderMonomial {
    exps: BTreeMap<u32, u32>,
}

impl LadderMonomial {
    pub fn one() -> Self {
        LadderMonomial::default()
    }

    /// `x_n`, `n >= 1`.
    pub fn generator(n: u32) -> Self {
        assert!(n >= 1, "ladder generators are indexed from 1");
        let mut exps = BTreeMap::new();
        exps.insert(n, 1);
        LadderMonomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().map(|(&i, &e)| (i, e))
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|(&i, &e)| (i as usize) * (e as usize)).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (&i, &e) in &other.exps {
            *exps.entry(i).or_insert(0) += e;
        }
        LadderMonomial { exps }
    }

    /// `x_i ↦ x_{i+1}` on every factor.
    pub fn shift_indices(&self) -> Self {
        LadderMonomial {
            exps: self.exps.iter().map(|(&i, &e)| (i + 1, e)).collect(),
        }
    }
}

impl fmt::Display for LadderMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(&i, &e)| {
                if e == 1 {
                    format!("x{i}")
                } else {
                    format!("x{i}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A member of the ladder algebra: sparse polynomial in `x1, x2, ...`.
pub type LadderPoly<C> = LinComb<LadderMonomial, C>;

/// Arity-2 tensors over the ladder algebra.
pub type LadderTensor2<C> = LinComb<(LadderMonomial, LadderMonomial), C>;

pub fn ladder_one<C: Coefficient>() -> LadderPoly<C> {
    LinComb::basis(LadderMonomial::one())
}

pub fn ladder_generator<C: Coefficient>(n: u32) -> LadderPoly<C> {
    LinComb::basis(LadderMonomial::generator(n))
}

pub fn ladder_mul<C: Coefficient>(a: &LadderPoly<C>, b: &LadderPoly<C>) -> LadderPoly<C> {
    a.mul_with(b, LadderMonomial::mul)
}

/// Coefficient of the empty monomial; kills all generators.
pub fn ladder_counit<C: Coefficient>(p: &LadderPoly<C>) -> C {
    p.coeff_of(&LadderMonomial::one())
}

pub fn ladder_tensor_mul<C: Coefficient>(
    a: &LadderTensor2<C>,
    b: &LadderTensor2<C>,
) -> LadderTensor2<C> {
    a.mul_with(b, |(l1, r1), (l2, r2)| (l1.mul(l2), r1.mul(r2)))
}

/// `Δ(x_n) = Σ_{i=0..n} x_i ⊗ x_{n-i}` with `x_0 = 1`.
fn ladder_coproduct_generator<C: Coefficient>(n: u32) -> LadderTensor2<C> {
    let mono = |k: u32| {
        if k == 0 {
            LadderMonomial::one()
        } else {
            LadderMonomial::generator(k)
        }
    };
    let mut out = LinComb::zero();
    for i in 0..=n {
        out.add_term((mono(i), mono(n - i)), C::one());
    }
    out
}

fn ladder_coproduct_monomial<C: Coefficient>(m: &LadderMonomial) -> LadderTensor2<C> {
    let mut acc: LadderTensor2<C> = LinComb::basis((LadderMonomial::one(), LadderMonomial::one()));
    for (i, e) in m.exponents() {
        for _ in 0..e {
            acc = ladder_tensor_mul(&acc, &ladder_coproduct_generator(i));
        }
    }
    acc
}

/// The binomial-type coproduct, defined on generators and extended as an
/// algebra map.
pub fn ladder_coproduct<C: Coefficient>(p: &LadderPoly<C>) -> LadderTensor2<C> {
    p.apply_linear(ladder_coproduct_monomial)
}

/// `ᾱ`: on the constant part `1 ↦ x_1`; on positive-degree monomials the
/// index shift `x_{i1}···x_{ik} ↦ x_{i1+1}···x_{ik+1}`.
pub fn alpha_bar<C: Coefficient>(p: &LadderPoly<C>) -> LadderPoly<C> {
    p.apply_linear(|m| {
        if m.is_one() {
            ladder_generator(1)
        } else {
            LinComb::basis(m.shift_indices())
        }
    })
}

/// The n-node ladder tree `λ^n(1)`, `n >= 1`.
pub fn ladder_tree(n: u32) -> Tree {
    assert!(n >= 1);
    let mut t = Tree::leaf();
    for _ in 1..n {
        t = Tree::new(Vec::new(), vec![t]);
    }
    t
}

/// Inverse of [`ladder_tree`] on its image: `Some(n)` iff `t` is the
/// undecorated n-node ladder.
pub fn tree_ladder_length(t: &Tree) -> Option<u32> {
    if !t.decoration().is_empty() {
        return None;
    }
    match t.children() {
        [] => Some(1),
        [only] => tree_ladder_length(only).map(|n| n + 1),
        _ => None,
    }
}

/// The forest of ladder trees a monomial maps to under `j`.
pub fn ladder_monomial_forest(m: &LadderMonomial) -> Forest {
    let mut trees = Vec::new();
    for (i, e) in m.exponents() {
        for _ in 0..e {
            trees.push(ladder_tree(i));
        }
    }
    Forest::from_trees(trees)
}

/// Inverse of [`ladder_monomial_forest`] on forests of ladders.
pub fn forest_to_ladder(f: &Forest) -> Option<LadderMonomial> {
    if !f.loose_generators().is_empty() {
        return None;
    }
    let mut m = LadderMonomial::one();
    for t in f.trees() {
        m = m.mul(&LadderMonomial::generator(tree_ladder_length(t)?));
    }
    Some(m)
}

/// The embedding `j`: the algebra map with `x_n ↦ λ^n(1)`.
pub fn j_map<C: Coefficient>(p: &LadderPoly<C>) -> Element<C> {
    p.apply_linear(|m| LinComb::basis(ladder_monomial_forest(m)))
}

/// The retraction `r`: the unique algebra map with `r(1) = 1` and
/// `r ∘ λ = ᾱ ∘ r`, computed by structural recursion on canonical trees.
/// Defined on the undecorated algebra.
pub fn r_map<C: Coefficient>(a: &Element<C>) -> LadderPoly<C> {
    let mut memo: HashMap<Tree, LadderPoly<C>> = HashMap::new();
    a.apply_linear(|f| r_forest(f, &mut memo))
}

fn r_forest<C: Coefficient>(
    f: &Forest,
    memo: &mut HashMap<Tree, LadderPoly<C>>,
) -> LadderPoly<C> {
    assert!(
        f.loose_generators().is_empty(),
        "the retraction is defined on the undecorated algebra"
    );
    let mut acc = ladder_one();
    for t in f.trees() {
        let rt = r_tree(t, memo);
        acc = ladder_mul(&acc, &rt);
    }
    acc
}

fn r_tree<C: Coefficient>(t: &Tree, memo: &mut HashMap<Tree, LadderPoly<C>>) -> LadderPoly<C> {
    if let Some(v) = memo.get(t) {
        return v.clone();
    }
    let below = r_forest(&root_branches(t), memo);
    let out = alpha_bar(&below);
    memo.insert(t.clone(), out.clone());
    out
}

/// The q-deformed ladder coproduct on a generator, obtained by running the
/// coproduct recursion on the ladder tree inside the big algebra and pulling
/// the result back along `j`. Fails only if a term escapes the ladder image.
pub fn deformed_coproduct_generator<C: Coefficient>(
    n: u32,
    cop: &mut Coproduct<C>,
) -> Result<LadderTensor2<C>, LadderError> {
    let d = cop.of_tree(&ladder_tree(n));
    pull_back_tensor(&d)
}

/// Algebra-map extension of [`deformed_coproduct_generator`] to polynomials.
pub fn deformed_coproduct<C: Coefficient>(
    p: &LadderPoly<C>,
    cop: &mut Coproduct<C>,
) -> Result<LadderTensor2<C>, LadderError> {
    let mut out: LadderTensor2<C> = LinComb::zero();
    for (m, c) in p.iter() {
        let mut acc: LadderTensor2<C> =
            LinComb::basis((LadderMonomial::one(), LadderMonomial::one()));
        for (i, e) in m.exponents() {
            let dgen = deformed_coproduct_generator(i, cop)?;
            for _ in 0..e {
                acc = ladder_tensor_mul(&acc, &dgen);
            }
        }
        for (key, v) in acc.iter() {
            out.add_term(key.clone(), v.mul(c));
        }
    }
    Ok(out)
}

fn pull_back_tensor<C: Coefficient>(
    d: &TensorElement<C>,
) -> Result<LadderTensor2<C>, LadderError> {
    assert_eq!(d.arity(), 2);
    let mut out = LinComb::zero();
    for (key, c) in d.iter() {
        let left = forest_to_ladder(&key[0])
            .ok_or_else(|| LadderError::NotLadderImage(key[0].code().to_string()))?;
        let right = forest_to_ladder(&key[1])
            .ok_or_else(|| LadderError::NotLadderImage(key[1].code().to_string()))?;
        out.add_term((left, right), c.clone());
    }
    Ok(out)
}

impl<C: Coefficient> fmt::Display for LinComb<LadderMonomial, C> {
    /// Sum of `c*x1^a*x2^b` terms, generators ascending within a term, terms
    /// sorted by (degree, encoding).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(usize, String, &C)> = self
            .iter()
            .map(|(m, c)| (m.degree(), m.to_string(), c))
            .collect();
        terms.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        f.write_str(&crate::hopf::format_sum(
            terms.into_iter().map(|(_, s, c)| (s, c)),
            "*",
        ))
    }
}

// ---- the pointed-object side ----

/// A well-pointed object presented by its complement-of-basepoint generators;
/// the basepoint is the implicit unit summand.
#[derive(Clone, Debug)]
pub struct WellPointedObject {
    generators: Vec<String>,
}

impl WellPointedObject {
    pub fn new(generators: impl IntoIterator<Item = impl Into<String>>) -> Self {
        WellPointedObject {
            generators: generators.into_iter().map(Into::into).collect(),
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }
}

/// A monomial in named free-algebra generators.
pub type GenMonomial = BTreeMap<String, u32>;
/// A member of the free commutative algebra on named generators.
pub type GenPoly<C> = LinComb<GenMonomial, C>;

pub fn gen_monomial_mul(a: &GenMonomial, b: &GenMonomial) -> GenMonomial {
    let mut out = a.clone();
    for (name, e) in b {
        *out.entry(name.clone()).or_insert(0) += e;
    }
    out
}

/// The free commutative algebra on a well-pointed object's generators,
/// together with the universal basepoint-preserving map `w`.
#[derive(Clone, Debug)]
pub struct FreeCommutativeAlgebra {
    generators: Vec<String>,
}

impl FreeCommutativeAlgebra {
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// `w` on the basepoint: the unit of the free algebra.
    pub fn w_basepoint<C: Coefficient>(&self) -> GenPoly<C> {
        LinComb::basis(GenMonomial::new())
    }

    /// `w` on a generator: the generator itself.
    pub fn w_generator<C: Coefficient>(&self, name: &str) -> Result<GenPoly<C>, LadderError> {
        if !self.generators.iter().any(|g| g == name) {
            return Err(LadderError::UnknownGenerator(name.to_string()));
        }
        Ok(LinComb::basis(GenMonomial::from([(name.to_string(), 1)])))
    }

    pub fn mul<C: Coefficient>(a: &GenPoly<C>, b: &GenPoly<C>) -> GenPoly<C> {
        a.mul_with(b, gen_monomial_mul)
    }

    /// The unique algebra map determined by generator images: freeness makes
    /// any basepoint-preserving map factor through `w` this way.
    pub fn induced_map<B: Ord + Clone, C: Coefficient>(
        &self,
        p: &GenPoly<C>,
        image: impl Fn(&str) -> Option<LinComb<B, C>>,
        mut mul: impl FnMut(&LinComb<B, C>, &LinComb<B, C>) -> LinComb<B, C>,
        one: LinComb<B, C>,
    ) -> Result<LinComb<B, C>, LadderError> {
        let mut out = LinComb::zero();
        for (m, c) in p.iter() {
            let mut acc = one.clone();
            for (name, &e) in m {
                let img =
                    image(name).ok_or_else(|| LadderError::UnknownGenerator(name.clone()))?;
                for _ in 0..e {
                    acc = mul(&acc, &img);
                }
            }
            out = out.add(&acc.scale(c));
        }
        Ok(out)
    }
}

/// `u_!` on a well-pointed object: the free commutative algebra on its
/// generators.
pub fn u_shriek(x: &WellPointedObject) -> FreeCommutativeAlgebra {
    FreeCommutativeAlgebra {
        generators: x.generators().to_vec(),
    }
}

/// All ladder monomials of degree at most `max_degree` (integer partitions
/// with parts read as generator indices), sorted. Starts with `1`.
pub fn ladder_monomials_up_to(max_degree: usize) -> Vec<LadderMonomial> {
    fn rec(
        max_part: u32,
        remaining: usize,
        current: &LadderMonomial,
        out: &mut Vec<LadderMonomial>,
    ) {
        out.push(current.clone());
        for part in 1..=max_part {
            if (part as usize) <= remaining {
                let next = current.mul(&LadderMonomial::generator(part));
                rec(part, remaining - part as usize, &next, out);
            }
        }
    }
    let mut out = Vec::new();
    rec(max_degree as u32, max_degree, &LadderMonomial::one(), &mut out);
    out.sort();
    out
}

/// The initial pointed object with endomorphism, modeled on its basis
/// `x_0, x_1, ...` with the index shift as endomorphism: `w` sends `x_0` to
/// `1` and `x_n` to the ladder generator `x_n`.
pub fn sequence_w<C: Coefficient>(n: u32) -> LadderPoly<C> {
    if n == 0 {
        ladder_one()
    } else {
        ladder_generator(n)
    }
}

pub fn sequence_alpha(n: u32) -> u32 {
    n + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{BivariatePoly, Rational};
    use crate::hopf::{self, coproduct, lambda_op, product, Twisting};
    use crate::trees::{enumerate_forests, enumerate_trees, parse_forest, parse_tree};

    fn rat(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn x(n: u32) -> LadderPoly<Rational> {
        ladder_generator(n)
    }

    fn mono(parts: &[(u32, u32)]) -> LadderMonomial {
        let mut m = LadderMonomial::one();
        for &(i, e) in parts {
            for _ in 0..e {
                m = m.mul(&LadderMonomial::generator(i));
            }
        }
        m
    }

    fn ck_cop() -> Coproduct<Rational> {
        Coproduct::new(Twisting::Identity, Twisting::CounitUnit)
    }

    #[test]
    fn coproduct_on_generators() {
        let d = ladder_coproduct(&x(1));
        let mut expected: LadderTensor2<Rational> = LinComb::zero();
        expected.add_term((LadderMonomial::one(), mono(&[(1, 1)])), rat(1));
        expected.add_term((mono(&[(1, 1)]), LadderMonomial::one()), rat(1));
        assert_eq!(d, expected);

        let d = ladder_coproduct(&x(2));
        let mut expected: LadderTensor2<Rational> = LinComb::zero();
        expected.add_term((LadderMonomial::one(), mono(&[(2, 1)])), rat(1));
        expected.add_term((mono(&[(1, 1)]), mono(&[(1, 1)])), rat(1));
        expected.add_term((mono(&[(2, 1)]), LadderMonomial::one()), rat(1));
        assert_eq!(d, expected);
    }

    #[test]
    fn coproduct_extends_as_algebra_map() {
        let sq = ladder_mul(&x(1), &x(1));
        let d = ladder_coproduct(&sq);
        let mut expected: LadderTensor2<Rational> = LinComb::zero();
        expected.add_term((LadderMonomial::one(), mono(&[(1, 2)])), rat(1));
        expected.add_term((mono(&[(1, 1)]), mono(&[(1, 1)])), rat(2));
        expected.add_term((mono(&[(1, 2)]), LadderMonomial::one()), rat(1));
        assert_eq!(d, expected);
        assert!(ladder_counit(&sq).is_zero());
    }

    #[test]
    fn binomial_formula_matches_pullback_of_recursion() {
        // the paper-style closed formula against the (1,0) recursion pullback
        let mut cop = ck_cop();
        for n in 1..=6 {
            let direct = ladder_coproduct(&x(n));
            let pulled = deformed_coproduct_generator(n, &mut cop).unwrap();
            assert_eq!(direct, pulled, "mismatch at x{n}");
        }
    }

    #[test]
    fn alpha_bar_examples() {
        assert_eq!(alpha_bar(&ladder_one::<Rational>()), x(1));
        assert_eq!(alpha_bar(&x(1)), x(2));
        let m: LadderPoly<Rational> = LinComb::basis(mono(&[(2, 1), (1, 1)]));
        assert_eq!(alpha_bar(&m), LinComb::basis(mono(&[(3, 1), (2, 1)])));
        // constant part routed through the unit summand
        let p = LinComb::from_terms([(LadderMonomial::one(), rat(2)), (mono(&[(1, 1)]), rat(3))]);
        let expected =
            LinComb::from_terms([(mono(&[(1, 1)]), rat(2)), (mono(&[(2, 1)]), rat(3))]);
        assert_eq!(alpha_bar(&p), expected);
        assert!(ladder_counit(&alpha_bar(&p)).is_zero());
    }

    #[test]
    fn alpha_bar_intertwines_w() {
        for n in 0..=6 {
            assert_eq!(
                alpha_bar(&sequence_w::<Rational>(n)),
                sequence_w(sequence_alpha(n))
            );
        }
    }

    #[test]
    fn j_examples() {
        assert_eq!(j_map(&x(1)), hopf::forest_element(parse_forest("[]").unwrap()));
        assert_eq!(
            j_map(&x(3)),
            hopf::forest_element(parse_forest("[[[]]]").unwrap())
        );
        // algebra map
        let p = ladder_mul(&x(2), &x(1));
        assert_eq!(
            j_map(&p),
            hopf::forest_element(parse_forest("[[]][]").unwrap())
        );
        assert_eq!(ladder_tree(3), parse_tree("[[[]]]").unwrap());
        assert_eq!(tree_ladder_length(&parse_tree("[[[]]]").unwrap()), Some(3));
        assert_eq!(tree_ladder_length(&parse_tree("[[][]]").unwrap()), None);
    }

    #[test]
    fn j_is_a_coalgebra_map_at_identity_counit() {
        let mut cop = ck_cop();
        for n in 1..=6 {
            let lhs = cop.of_element(&j_map(&x(n)));
            let mut rhs = TensorElement::zero(2);
            for ((m1, m2), c) in ladder_coproduct(&x(n)).iter() {
                rhs.add_term(
                    vec![ladder_monomial_forest(m1), ladder_monomial_forest(m2)],
                    c.clone(),
                );
            }
            assert_eq!(lhs, rhs, "j fails to commute with Δ on x{n}");
        }
        // the n = 2 case, explicitly
        let d = coproduct(
            &j_map(&x(2)),
            &Twisting::Identity,
            &Twisting::CounitUnit,
        );
        let f = |s: &str| parse_forest(s).unwrap();
        let mut expected = TensorElement::zero(2);
        expected.add_term(vec![Forest::empty(), f("[[]]")], rat(1));
        expected.add_term(vec![f("[[]]"), Forest::empty()], rat(1));
        expected.add_term(vec![f("[]"), f("[]")], rat(1));
        assert_eq!(d, expected);
    }

    #[test]
    fn j_is_a_coalgebra_map_for_the_deformed_symbolic_coproduct() {
        let mut cop = Coproduct::new(
            Twisting::q_power(BivariatePoly::q1()),
            Twisting::q_power(BivariatePoly::q2()),
        );
        // monomials of degree <= 6
        let monos = ladder_monomials_up_to(6);
        for m in monos {
            let p: LadderPoly<BivariatePoly> = LinComb::basis(m.clone());
            let lhs = cop.of_element(&j_map(&p));
            let mut rhs = TensorElement::zero(2);
            for ((m1, m2), c) in deformed_coproduct(&p, &mut cop).unwrap().iter() {
                rhs.add_term(
                    vec![ladder_monomial_forest(m1), ladder_monomial_forest(m2)],
                    c.clone(),
                );
            }
            assert_eq!(lhs, rhs, "deformed compatibility fails on {m}");
        }
    }

    #[test]
    fn r_examples() {
        let el = |s: &str| hopf::parse_element::<Rational>(s).unwrap();
        assert_eq!(r_map(&el("[]")), x(1));
        assert_eq!(r_map(&el("[[[]]]")), x(3));
        assert_eq!(r_map(&el("1")), ladder_one());
        // the initiality recursion on λ(λ²(1)·λ(1))
        let computed = r_map(&el("[[[]][]]"));
        assert_eq!(computed, LinComb::basis(mono(&[(3, 1), (2, 1)])));
        assert_eq!(computed.to_string(), "x2*x3");
    }

    #[test]
    fn r_retracts_j() {
        for m in ladder_monomials_up_to(6) {
            let p: LadderPoly<Rational> = LinComb::basis(m.clone());
            assert_eq!(r_map(&j_map(&p)), p, "r∘j != id on {m}");
        }
    }

    #[test]
    fn r_is_an_algebra_map_intertwining_lambda() {
        for forest in enumerate_forests(5) {
            let a: Element<Rational> = hopf::forest_element(forest.clone());
            assert_eq!(
                r_map(&lambda_op(&a)),
                alpha_bar(&r_map(&a)),
                "r∘λ != ᾱ∘r on {forest}"
            );
        }
        let el = |s: &str| hopf::parse_element::<Rational>(s).unwrap();
        let (a, b) = (el("[[]] + 2*[]"), el("[][] - 3"));
        assert_eq!(
            r_map(&product(&a, &b)),
            ladder_mul(&r_map(&a), &r_map(&b))
        );
        // εr = ε
        assert_eq!(ladder_counit(&r_map(&b)), hopf::counit(&b));
    }

    #[test]
    fn r_does_not_commute_with_coproducts() {
        let mut cop = ck_cop();
        let mut witness = None;
        'outer: for n in 1..=4 {
            for t in enumerate_trees(n) {
                let a: Element<Rational> = hopf::tree_element(t.clone());
                let lhs = ladder_coproduct(&r_map(&a));
                let mut rhs: LadderTensor2<Rational> = LinComb::zero();
                for (key, c) in cop.of_element(&a).iter() {
                    rhs.add_term(
                        (r_forest_for_test(&key[0]), r_forest_for_test(&key[1])),
                        c.clone(),
                    );
                }
                if lhs != rhs {
                    witness = Some(t);
                    break 'outer;
                }
            }
        }
        let witness = witness.expect("a non-commuting witness of degree <= 4 must exist");
        assert!(witness.node_count() <= 4);
    }

    fn r_forest_for_test(f: &Forest) -> LadderMonomial {
        let p = r_map(&hopf::forest_element::<Rational>(f.clone()));
        assert_eq!(p.num_terms(), 1);
        let monomial = p.iter().next().unwrap().0.clone();
        monomial
    }

    #[test]
    fn u_shriek_examples() {
        let empty = u_shriek(&WellPointedObject::new(Vec::<String>::new()));
        assert!(empty.generators().is_empty());
        assert_eq!(empty.w_basepoint::<Rational>(), LinComb::basis(GenMonomial::new()));

        let free = u_shriek(&WellPointedObject::new(["a"]));
        let a = free.w_generator::<Rational>("a").unwrap();
        assert!(free.w_generator::<Rational>("b").is_err());

        // factorization through w: a ↦ • induces a^k ↦ •^k
        let a_cubed = FreeCommutativeAlgebra::mul(&FreeCommutativeAlgebra::mul(&a, &a), &a);
        let image = free
            .induced_map(
                &a_cubed,
                |name| {
                    (name == "a").then(|| hopf::forest_element::<Rational>(
                        parse_forest("[]").unwrap(),
                    ))
                },
                |x, y| product(x, y),
                hopf::unit(),
            )
            .unwrap();
        assert_eq!(image, hopf::forest_element(parse_forest("[][][]").unwrap()));

        // identification with the ladder algebra on x1..x4
        let names: Vec<String> = (1..=4).map(|i| format!("x{i}")).collect();
        let free = u_shriek(&WellPointedObject::new(names));
        let p = FreeCommutativeAlgebra::mul(
            &free.w_generator::<Rational>("x2").unwrap(),
            &free.w_generator::<Rational>("x2").unwrap(),
        );
        let image = free
            .induced_map(
                &p,
                |name| name[1..].parse::<u32>().ok().map(ladder_generator::<Rational>),
                |x, y| ladder_mul(x, y),
                ladder_one(),
            )
            .unwrap();
        assert_eq!(image, LinComb::basis(mono(&[(2, 2)])));
    }

    #[test]
    fn ladder_poly_display() {
        let p: LadderPoly<Rational> = LinComb::from_terms([
            (mono(&[(3, 1), (2, 1)]), rat(1)),
            (mono(&[(1, 2)]), rat(-2)),
            (LadderMonomial::one(), rat(5)),
        ]);
        assert_eq!(p.to_string(), "5 - 2*x1^2 + x2*x3");
    }
}
