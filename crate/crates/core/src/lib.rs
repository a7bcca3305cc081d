//! Exact-arithmetic computer algebra for the Hopf algebra of rooted trees.
//!
//! The algebra of canonical unordered rooted trees carries a whole family of
//! coproducts `Δ_{σ1,σ2}`, pinned down by requiring `Δ` to be an algebra map
//! with `Δ ∘ λ = (σ1 ⊗ λ + λ ⊗ σ2) ∘ Δ`, where `λ` grafts a forest under a
//! new root. This crate implements:
//!
//! - exact rationals and `q1`/`q2`-polynomials ([`coeff`]);
//! - canonical trees, forests, enumeration, and admissible cuts ([`trees`]);
//! - the algebra itself: product, grafting, counit, twisting maps, the
//!   coproduct family, an independent admissible-cut coproduct used as a
//!   cross-check, and the antipode ([`hopf`]);
//! - the coalgebra cochain complex with its face maps, coboundary, cocycle
//!   checks, and the universal map into any basis-presented Hopf target
//!   ([`cohomology`]);
//! - the ladder (linear-tree) subalgebra with its embedding and retraction
//!   ([`ladder`]);
//! - named verification suites used by the `hopftree` CLI ([`suites`]).

pub mod coeff;
pub mod cohomology;
pub mod hopf;
pub mod ladder;
pub mod lincomb;
pub mod report;
pub mod suites;
pub mod trees;
