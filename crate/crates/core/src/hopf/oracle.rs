//! The admissible-cut coproduct, computed directly from cut enumeration.
//!
//! On a tree: `Δ(T) = 1 ⊗ T + T ⊗ 1 + Σ_c F_c ⊗ R_c` over all admissible
//! cuts `c`; extended multiplicatively to forests (loose generators are
//! primitive) and linearly to elements. This is deliberately independent of
//! the recursive coproduct in the parent module: the two are compared term by
//! term in tests and in the `oracle` verification suite, where the recursion
//! runs at `(identity, counit-unit)`.

use super::{Element, TensorElement};
use crate::coeff::Coefficient;
use crate::trees::{admissible_cuts, Forest, Tree};

pub fn cut_coproduct_tree<C: Coefficient>(t: &Tree) -> TensorElement<C> {
    let mut out = TensorElement::zero(2);
    let whole = Forest::single(t.clone());
    out.add_term(vec![Forest::empty(), whole.clone()], C::one());
    out.add_term(vec![whole, Forest::empty()], C::one());
    for cut in admissible_cuts(t) {
        out.add_term(
            vec![cut.fallen, Forest::single(cut.trunk)],
            C::one(),
        );
    }
    out
}

pub fn cut_coproduct_forest<C: Coefficient>(f: &Forest) -> TensorElement<C> {
    let mut acc = TensorElement::unit(2);
    for t in f.trees() {
        acc = acc.mul(&cut_coproduct_tree(t));
    }
    for g in f.loose_generators() {
        let gen = Forest::generator(g.clone());
        let mut prim = TensorElement::zero(2);
        prim.add_term(vec![Forest::empty(), gen.clone()], C::one());
        prim.add_term(vec![gen, Forest::empty()], C::one());
        acc = acc.mul(&prim);
    }
    acc
}

pub fn cut_coproduct_element<C: Coefficient>(a: &Element<C>) -> TensorElement<C> {
    let mut out = TensorElement::zero(2);
    for (f, c) in a.iter() {
        out.add_scaled(&cut_coproduct_forest(f), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;
    use crate::trees::parse_tree;

    fn t(s: &str) -> Tree {
        parse_tree(s).unwrap()
    }

    fn f(s: &str) -> Forest {
        crate::trees::parse_forest(s).unwrap()
    }

    #[test]
    fn single_node_has_no_cut_terms() {
        let d: TensorElement<Rational> = cut_coproduct_tree(&t("[]"));
        assert_eq!(d.num_terms(), 2);
        assert_eq!(d.coeff_of(&[Forest::empty(), f("[]")]), Rational::one());
        assert_eq!(d.coeff_of(&[f("[]"), Forest::empty()]), Rational::one());
    }

    #[test]
    fn ladder_cut_terms() {
        let d: TensorElement<Rational> = cut_coproduct_tree(&t("[[]]"));
        assert_eq!(d.num_terms(), 3);
        assert_eq!(d.coeff_of(&[f("[]"), f("[]")]), Rational::one());

        let d3: TensorElement<Rational> = cut_coproduct_tree(&t("[[[]]]"));
        assert_eq!(d3.num_terms(), 4);
        assert_eq!(d3.coeff_of(&[f("[]"), f("[[]]")]), Rational::one());
        assert_eq!(d3.coeff_of(&[f("[[]]"), f("[]")]), Rational::one());
    }

    #[test]
    fn multiplicative_on_forests() {
        let d: TensorElement<Rational> = cut_coproduct_forest(&f("[][]"));
        let dot: TensorElement<Rational> = cut_coproduct_tree(&t("[]"));
        assert_eq!(d, dot.mul(&dot));
        assert_eq!(d.coeff_of(&[f("[]"), f("[]")]), Rational::from_int(2));
    }
}
