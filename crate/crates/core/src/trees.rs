//! Canonical unordered rooted trees and forests.
//!
//! Trees are kept in canonical form at all times: children are sorted
//! ascending by the byte-lexicographic order of their bracket encodings, so
//! two trees are isomorphic iff their encodings are byte-identical. A forest
//! is a multiset of trees (plus, in the generator-decorated variant, a
//! multiset of loose generator names), also stored sorted.
//!
//! Encoding: `[` + optional `{name,name,...}` decoration + child encodings +
//! `]`. A loose generator in a forest is written `{name}`; the empty forest
//! is written `1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

/// A canonical unordered rooted tree, optionally decorated by a multiset of
/// generator names at each node.
#[derive(Clone)]
pub struct Tree {
    code: String,
    decoration: Vec<String>,
    children: Vec<Tree>,
    nodes: usize,
}

impl Tree {
    /// The single-node tree `[]`.
    pub fn leaf() -> Tree {
        Tree::new(Vec::new(), Vec::new())
    }

    /// Build the canonical tree with the given root decoration and child
    /// subtrees; both are sorted into canonical order here.
    pub fn new(mut decoration: Vec<String>, mut children: Vec<Tree>) -> Tree {
        decoration.sort();
        children.sort();
        let mut code = String::from("[");
        if !decoration.is_empty() {
            code.push('{');
            code.push_str(&decoration.join(","));
            code.push('}');
        }
        for c in &children {
            code.push_str(&c.code);
        }
        code.push(']');
        let nodes = 1 + children.iter().map(|c| c.nodes).sum::<usize>();
        Tree {
            code,
            decoration,
            children,
            nodes,
        }
    }

    /// Canonical bracket encoding; equality of trees is equality of codes.
    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    pub fn decoration(&self) -> &[String] {
        &self.decoration
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn is_decorated(&self) -> bool {
        !self.decoration.is_empty() || self.children.iter().any(Tree::is_decorated)
    }
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code
    }
}
impl Eq for Tree {}
impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Tree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.code.cmp(&other.code)
    }
}
impl std::hash::Hash for Tree {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.code.hash(state);
    }
}
impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({})", self.code)
    }
}
impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}
impl FromStr for Tree {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tree(s)
    }
}

/// A canonical multiset of trees together with a multiset of loose generator
/// names (empty outside the generator-decorated algebra). The monomial basis
/// of the algebra.
#[derive(Clone)]
pub struct Forest {
    code: String,
    trees: Vec<Tree>,
    gens: Vec<String>,
    degree: usize,
}

impl Forest {
    /// The empty forest, encoded `1` — the multiplicative unit monomial.
    pub fn empty() -> Forest {
        Forest::from_parts(Vec::new(), Vec::new())
    }

    pub fn single(t: Tree) -> Forest {
        Forest::from_parts(vec![t], Vec::new())
    }

    pub fn from_trees(trees: Vec<Tree>) -> Forest {
        Forest::from_parts(trees, Vec::new())
    }

    pub fn generator(name: impl Into<String>) -> Forest {
        Forest::from_parts(Vec::new(), vec![name.into()])
    }

    pub fn from_parts(mut trees: Vec<Tree>, mut gens: Vec<String>) -> Forest {
        trees.sort();
        gens.sort();
        let degree = trees.iter().map(Tree::node_count).sum();
        let code = if trees.is_empty() && gens.is_empty() {
            "1".to_string()
        } else {
            let mut code = String::new();
            for t in &trees {
                code.push_str(t.code());
            }
            for g in &gens {
                code.push('{');
                code.push_str(g);
                code.push('}');
            }
            code
        };
        Forest {
            code,
            trees,
            gens,
            degree,
        }
    }

    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn loose_generators(&self) -> &[String] {
        &self.gens
    }

    /// Total node count over all trees; loose generators contribute zero.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Node count plus loose-generator count; zero only for the empty forest.
    pub fn content(&self) -> usize {
        self.degree + self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty() && self.gens.is_empty()
    }

    /// Multiset union — the commutative monomial product.
    pub fn mul(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Forest::from_parts(trees, gens)
    }
}

impl PartialEq for Forest {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code
    }
}
impl Eq for Forest {}
impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Forest {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.code.cmp(&other.code)
    }
}
impl std::hash::Hash for Forest {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.code.hash(state);
    }
}
impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Forest({})", self.code)
    }
}
impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}
impl FromStr for Forest {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_forest(s)
    }
}

/// Graft a forest under a new root node: the monomial-level action of the
/// grafting operator. Loose generators become the new node's decoration.
pub fn make_tree(children: &Forest) -> Tree {
    Tree::new(children.gens.clone(), children.trees.clone())
}

/// Inverse of [`make_tree`] on the tree basis: the root's child forest, with
/// the root decoration released as loose generators.
pub fn root_branches(t: &Tree) -> Forest {
    Forest::from_parts(t.children.to_vec(), t.decoration.to_vec())
}

// ---- parsing ----

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(got) if got == b => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => Err(ParseError::new(
                self.pos,
                format!("expected '{}', found '{}'", b as char, got as char),
            )),
            None => Err(ParseError::new(
                self.pos,
                format!("expected '{}', found end of input", b as char),
            )),
        }
    }

    fn name(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_alphanumeric() || b == b'_') {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::new(start, "expected a generator name"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("names are ascii")
            .to_string())
    }

    /// `{name,name,...}` with at least one name.
    fn decoration(&mut self) -> Result<Vec<String>, ParseError> {
        self.expect(b'{')?;
        let mut names = vec![self.name()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            names.push(self.name()?);
        }
        self.expect(b'}')?;
        Ok(names)
    }

    fn tree(&mut self) -> Result<Tree, ParseError> {
        self.expect(b'[')?;
        let decoration = if self.peek() == Some(b'{') {
            self.decoration()?
        } else {
            Vec::new()
        };
        let mut children = Vec::new();
        while self.peek() == Some(b'[') {
            children.push(self.tree()?);
        }
        self.expect(b']')?;
        Ok(Tree::new(decoration, children))
    }

    fn at_end(&self) -> bool {
        self.pos == self.bytes.len()
    }
}

/// Parse one tree starting at byte offset `start` of `s`; returns the tree
/// and the offset just past it. Error offsets are absolute in `s`.
pub(crate) fn parse_tree_prefix(s: &str, start: usize) -> Result<(Tree, usize), ParseError> {
    let mut p = Parser {
        bytes: s.as_bytes(),
        pos: start,
    };
    let t = p.tree()?;
    Ok((t, p.pos))
}

/// Parse one `{name}` loose-generator token starting at `start`.
pub(crate) fn parse_generator_token(s: &str, start: usize) -> Result<(String, usize), ParseError> {
    let mut p = Parser {
        bytes: s.as_bytes(),
        pos: start,
    };
    p.expect(b'{')?;
    let name = p.name()?;
    p.expect(b'}')?;
    Ok((name, p.pos))
}

/// Parse a bracket encoding into a canonical tree. Child order in the input
/// is arbitrary; the result is canonical.
pub fn parse_tree(s: &str) -> Result<Tree, ParseError> {
    if s.is_empty() {
        return Err(ParseError::new(0, "empty input"));
    }
    let mut p = Parser::new(s);
    let t = p.tree()?;
    if !p.at_end() {
        return Err(ParseError::new(p.pos, "unexpected trailing input"));
    }
    Ok(t)
}

/// Parse a forest: `1` for the empty forest, otherwise a concatenation of
/// tree encodings and `{name}` loose-generator tokens.
pub fn parse_forest(s: &str) -> Result<Forest, ParseError> {
    if s.is_empty() {
        return Err(ParseError::new(0, "empty input"));
    }
    if s == "1" {
        return Ok(Forest::empty());
    }
    let mut p = Parser::new(s);
    let mut trees = Vec::new();
    let mut gens = Vec::new();
    while !p.at_end() {
        match p.peek() {
            Some(b'[') => trees.push(p.tree()?),
            Some(b'{') => {
                p.pos += 1;
                gens.push(p.name()?);
                p.expect(b'}')?;
            }
            Some(b) => {
                return Err(ParseError::new(
                    p.pos,
                    format!("expected '[' or '{{', found '{}'", b as char),
                ))
            }
            None => unreachable!(),
        }
    }
    Ok(Forest::from_parts(trees, gens))
}

// ---- enumeration ----

/// All canonical trees with node counts `1..=n`, indexed by node count
/// (index 0 is empty).
pub fn trees_by_size(n: usize) -> Vec<Vec<Tree>> {
    let mut levels: Vec<Vec<Tree>> = vec![Vec::new()];
    for k in 1..=n {
        let mut level: Vec<Tree> = forests_from_levels(&levels, k - 1)
            .into_iter()
            .map(|f| make_tree(&f))
            .collect();
        level.sort();
        levels.push(level);
    }
    levels
}

/// All canonical trees with exactly `n` nodes, sorted by encoding. `n = 0`
/// yields the empty set (the empty forest is not a tree).
pub fn enumerate_trees(n: usize) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    trees_by_size(n).pop().unwrap()
}

fn forests_from_levels(levels: &[Vec<Tree>], degree: usize) -> Vec<Forest> {
    // Pool ordered by (size, code); multisets are generated as non-decreasing
    // index sequences so each forest appears exactly once.
    let pool: Vec<&Tree> = levels.iter().flatten().collect();
    let mut out = Vec::new();
    let mut current: Vec<Tree> = Vec::new();
    fn rec(
        pool: &[&Tree],
        start: usize,
        remaining: usize,
        current: &mut Vec<Tree>,
        out: &mut Vec<Forest>,
    ) {
        if remaining == 0 {
            out.push(Forest::from_trees(current.clone()));
            return;
        }
        for i in start..pool.len() {
            let size = pool[i].node_count();
            if size <= remaining {
                current.push(pool[i].clone());
                rec(pool, i, remaining - size, current, out);
                current.pop();
            }
        }
    }
    rec(&pool, 0, degree, &mut current, &mut out);
    out.sort();
    out
}

/// All undecorated forests with exactly `degree` total nodes, sorted.
pub fn forests_of_degree(degree: usize) -> Vec<Forest> {
    forests_from_levels(&trees_by_size(degree), degree)
}

/// All undecorated forests of degree `<= max_degree`, ordered by
/// (degree, encoding). Starts with the empty forest.
pub fn enumerate_forests(max_degree: usize) -> Vec<Forest> {
    let levels = trees_by_size(max_degree);
    let mut out = Vec::new();
    for d in 0..=max_degree {
        out.extend(forests_from_levels(&levels, d));
    }
    out
}

// ---- admissible cuts ----

/// An edge of a tree, identified by the path of child indices from the root
/// to the parent node, plus the child index of the edge itself. Indices refer
/// to the canonical child order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub parent_path: Vec<usize>,
    pub child_index: usize,
}

impl Edge {
    fn node_path(&self) -> Vec<usize> {
        let mut p = self.parent_path.clone();
        p.push(self.child_index);
        p
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CutError {
    #[error("a cut must remove at least one edge")]
    Empty,
    #[error("two removed edges lie on one root-to-leaf path")]
    NestedEdges,
}

/// A non-empty set of edges with at most one edge on each root-to-leaf path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    edges: BTreeSet<Edge>,
}

impl Cut {
    pub fn new(edges: BTreeSet<Edge>) -> Result<Cut, CutError> {
        if edges.is_empty() {
            return Err(CutError::Empty);
        }
        let paths: Vec<Vec<usize>> = edges.iter().map(Edge::node_path).collect();
        for (i, a) in paths.iter().enumerate() {
            for b in paths.iter().skip(i + 1) {
                if a.starts_with(b) || b.starts_with(a) {
                    return Err(CutError::NestedEdges);
                }
            }
        }
        Ok(Cut { edges })
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }
}

/// One admissible cut of a tree: the removed edges, the forest of fallen
/// subtrees, and the remaining trunk containing the root.
#[derive(Clone, Debug)]
pub struct AdmissibleCut {
    pub cut: Cut,
    pub fallen: Forest,
    pub trunk: Tree,
}

/// All admissible cuts of `t`, one entry per non-empty edge choice. Cuts are
/// enumerated by recursion over edges: once an edge is removed, nothing below
/// it may be removed, which enforces the one-edge-per-path rule directly.
pub fn admissible_cuts(t: &Tree) -> Vec<AdmissibleCut> {
    cut_options(t)
        .into_iter()
        .filter(|(edges, _, _)| !edges.is_empty())
        .map(|(edges, fallen, trunk)| AdmissibleCut {
            cut: Cut::new(edges.into_iter().collect()).expect("recursion yields admissible cuts"),
            fallen,
            trunk,
        })
        .collect()
}

/// All cut choices of `t` including the empty one, as (edges, fallen, trunk).
fn cut_options(t: &Tree) -> Vec<(Vec<Edge>, Forest, Tree)> {
    // Per child: either remove its edge (whole subtree falls, no deeper cuts
    // on that branch) or keep it with any cut choice of the subtree.
    let mut acc: Vec<(Vec<Edge>, Vec<Tree>, Vec<Tree>)> = vec![(Vec::new(), Vec::new(), Vec::new())];
    for (i, child) in t.children.iter().enumerate() {
        let mut options: Vec<(Vec<Edge>, Vec<Tree>, Option<Tree>)> = vec![(
            vec![Edge {
                parent_path: Vec::new(),
                child_index: i,
            }],
            vec![child.clone()],
            None,
        )];
        for (sub_edges, sub_fallen, sub_trunk) in cut_options(child) {
            let lifted = sub_edges
                .into_iter()
                .map(|mut e| {
                    e.parent_path.insert(0, i);
                    e
                })
                .collect();
            options.push((lifted, sub_fallen.trees().to_vec(), Some(sub_trunk)));
        }
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for (edges, fallen, kept) in &acc {
            for (opt_edges, opt_fallen, opt_trunk) in &options {
                let mut edges = edges.clone();
                edges.extend(opt_edges.iter().cloned());
                let mut fallen = fallen.clone();
                fallen.extend(opt_fallen.iter().cloned());
                let mut kept = kept.clone();
                if let Some(trunk_child) = opt_trunk {
                    kept.push(trunk_child.clone());
                }
                next.push((edges, fallen, kept));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(edges, fallen, kept)| {
            (
                edges,
                Forest::from_trees(fallen),
                Tree::new(t.decoration.clone(), kept),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(s: &str) -> Tree {
        parse_tree(s).unwrap()
    }

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    #[test]
    fn make_tree_examples() {
        assert_eq!(make_tree(&Forest::empty()).code(), "[]");
        assert_eq!(make_tree(&f("[]")).code(), "[[]]");
        // canonical child sort: "[[]]" < "[]"
        assert_eq!(make_tree(&f("[[]][]")).code(), "[[[]][]]");
        assert_eq!(make_tree(&f("[][[]]")).code(), "[[[]][]]");
    }

    #[test]
    fn parse_canonicalizes() {
        assert_eq!(t("[[][[]]]").code(), "[[[]][]]");
        assert_eq!(t("[]").node_count(), 1);
        assert_eq!(t("[[[]][]]").node_count(), 4);
    }

    #[test]
    fn parse_errors_name_offsets() {
        let e = parse_tree("[[]").unwrap_err();
        assert_eq!(e.offset, 3);
        let e = parse_tree("").unwrap_err();
        assert_eq!(e.offset, 0);
        let e = parse_tree("[]x").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse_tree("[{a,}]").unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(parse_forest("").is_err());
        assert!(parse_forest("x").is_err());
    }

    #[test]
    fn decorated_encoding() {
        let tree = Tree::new(vec!["b".into(), "a".into()], vec![Tree::leaf()]);
        assert_eq!(tree.code(), "[{a,b}[]]");
        assert_eq!(t("[{a,b}[]]"), tree);
        let forest = Forest::from_parts(vec![Tree::leaf()], vec!["g".into()]);
        assert_eq!(forest.code(), "[]{g}");
        assert_eq!(f("[]{g}"), forest);
        assert_eq!(forest.degree(), 1);
        assert_eq!(forest.content(), 2);
    }

    #[test]
    fn forest_ops() {
        assert_eq!(Forest::empty().mul(&f("[][[]]")), f("[][[]]"));
        assert_eq!(f("[]").mul(&f("[[]]")), f("[[]][]"));
        assert_eq!(f("[[]][]").degree(), 3);
        assert_eq!(root_branches(&t("[[[]][]]")), f("[[]][]"));
        assert_eq!(root_branches(&make_tree(&f("[][][[]]"))), f("[][][[]]"));
        assert_eq!(Forest::empty().code(), "1");
    }

    /// Independent generator: grow trees one leaf at a time and dedup.
    fn grow_by_leaf(n: usize) -> Vec<Tree> {
        fn attach_everywhere(t: &Tree) -> Vec<Tree> {
            let mut out = Vec::new();
            let mut children = t.children().to_vec();
            children.push(Tree::leaf());
            out.push(Tree::new(t.decoration().to_vec(), children));
            for (i, c) in t.children().iter().enumerate() {
                for grown in attach_everywhere(c) {
                    let mut children = t.children().to_vec();
                    children[i] = grown;
                    out.push(Tree::new(t.decoration().to_vec(), children));
                }
            }
            out
        }
        let mut level = vec![Tree::leaf()];
        for _ in 1..n {
            let mut next: Vec<Tree> = level.iter().flat_map(|t| attach_everywhere(t)).collect();
            next.sort();
            next.dedup();
            level = next;
        }
        level
    }

    #[test]
    fn enumeration_matches_independent_generator() {
        let expected_counts = [1usize, 1, 2, 4, 9, 20, 48];
        for (i, &count) in expected_counts.iter().enumerate() {
            let n = i + 1;
            let enumerated = enumerate_trees(n);
            assert_eq!(enumerated.len(), count, "count mismatch at n = {n}");
            assert_eq!(enumerated, grow_by_leaf(n), "set mismatch at n = {n}");
        }
        assert!(enumerate_trees(0).is_empty());
    }

    #[test]
    fn forest_counts_follow_tree_counts() {
        // Forests of degree d correspond to trees of d+1 nodes via grafting.
        for d in 0..=6 {
            assert_eq!(forests_of_degree(d).len(), enumerate_trees(d + 1).len());
        }
        let all = enumerate_forests(3);
        assert_eq!(all.len(), 1 + 1 + 2 + 4);
        assert!(all[0].is_empty());
        // ordered by (degree, code)
        for w in all.windows(2) {
            assert!((w[0].degree(), w[0].code()) < (w[1].degree(), w[1].code()));
        }
    }

    #[test]
    fn canonical_image_unique_across_child_orderings() {
        fn all_orderings(t: &Tree) -> Vec<String> {
            if t.children().is_empty() {
                return vec![t.code().to_string()];
            }
            let per_child: Vec<Vec<String>> =
                t.children().iter().map(all_orderings).collect();
            let mut perms: Vec<Vec<usize>> = Vec::new();
            let mut idx: Vec<usize> = (0..per_child.len()).collect();
            permutations(&mut idx, 0, &mut perms);
            let mut out = Vec::new();
            for perm in &perms {
                let mut pieces: Vec<&Vec<String>> = perm.iter().map(|&i| &per_child[i]).collect();
                let mut combos: Vec<String> = vec![String::new()];
                while let Some(piece) = pieces.first() {
                    let mut next = Vec::new();
                    for c in &combos {
                        for p in *piece {
                            next.push(format!("{c}{p}"));
                        }
                    }
                    combos = next;
                    pieces.remove(0);
                }
                for c in combos {
                    out.push(format!("[{c}]"));
                }
            }
            out
        }
        fn permutations(idx: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
            if k == idx.len() {
                out.push(idx.clone());
                return;
            }
            for i in k..idx.len() {
                idx.swap(k, i);
                permutations(idx, k + 1, out);
                idx.swap(k, i);
            }
        }
        for n in 1..=5 {
            for tree in enumerate_trees(n) {
                for ordering in all_orderings(&tree) {
                    assert_eq!(parse_tree(&ordering).unwrap(), tree);
                }
            }
        }
    }

    #[test]
    fn cut_examples() {
        assert!(admissible_cuts(&t("[]")).is_empty());
        let cuts = admissible_cuts(&t("[[]]"));
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].fallen, f("[]"));
        assert_eq!(cuts[0].trunk, t("[]"));

        let cherry = t("[[][]]");
        let cuts = admissible_cuts(&cherry);
        let mut pairs: Vec<(String, String)> = cuts
            .iter()
            .map(|c| (c.fallen.code().to_string(), c.trunk.code().to_string()))
            .collect();
        pairs.sort();
        assert_eq!(
            pairs,
            vec![
                ("[]".to_string(), "[[]]".to_string()),
                ("[]".to_string(), "[[]]".to_string()),
                ("[][]".to_string(), "[]".to_string()),
            ]
        );
    }

    fn all_edges(t: &Tree) -> Vec<Edge> {
        let mut out = Vec::new();
        fn rec(t: &Tree, path: &[usize], out: &mut Vec<Edge>) {
            for (i, c) in t.children().iter().enumerate() {
                out.push(Edge {
                    parent_path: path.to_vec(),
                    child_index: i,
                });
                let mut p = path.to_vec();
                p.push(i);
                rec(c, &p, out);
            }
        }
        rec(t, &[], &mut out);
        out
    }

    /// Delete a set of edges, returning (fallen forest, trunk).
    fn apply_edge_set(t: &Tree, edges: &BTreeSet<Edge>) -> (Forest, Tree) {
        fn rec(t: &Tree, path: &[usize], edges: &BTreeSet<Edge>, fallen: &mut Vec<Tree>) -> Tree {
            let mut kept = Vec::new();
            for (i, c) in t.children().iter().enumerate() {
                let e = Edge {
                    parent_path: path.to_vec(),
                    child_index: i,
                };
                if edges.contains(&e) {
                    fallen.push(c.clone());
                } else {
                    let mut p = path.to_vec();
                    p.push(i);
                    kept.push(rec(c, &p, edges, fallen));
                }
            }
            Tree::new(t.decoration().to_vec(), kept)
        }
        let mut fallen = Vec::new();
        let trunk = rec(t, &[], edges, &mut fallen);
        (Forest::from_trees(fallen), trunk)
    }

    #[test]
    fn cuts_match_brute_force_subsets() {
        for n in 1..=5 {
            for tree in enumerate_trees(n) {
                // brute force: all non-empty admissible subsets of edges
                let edges = all_edges(&tree);
                let mut expected: Vec<(String, String)> = Vec::new();
                for mask in 1u32..(1 << edges.len()) {
                    let subset: BTreeSet<Edge> = edges
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, e)| e.clone())
                        .collect();
                    if Cut::new(subset.clone()).is_ok() {
                        let (fallen, trunk) = apply_edge_set(&tree, &subset);
                        expected.push((fallen.code().to_string(), trunk.code().to_string()));
                    }
                }
                expected.sort();

                let cuts = admissible_cuts(&tree);
                let mut got: Vec<(String, String)> = cuts
                    .iter()
                    .map(|c| (c.fallen.code().to_string(), c.trunk.code().to_string()))
                    .collect();
                got.sort();
                assert_eq!(got, expected, "cut mismatch on {}", tree.code());

                for c in &cuts {
                    // one edge per root-to-leaf path, enforced by Cut::new
                    assert!(Cut::new(c.cut.edges().clone()).is_ok());
                    // degree conservation
                    assert_eq!(
                        c.fallen.degree() + c.trunk.node_count(),
                        tree.node_count(),
                        "degree not conserved on {}",
                        tree.code()
                    );
                }
            }
        }
    }

    fn arb_tree() -> impl Strategy<Value = Tree> {
        let leaf = Just(Tree::leaf());
        leaf.prop_recursive(4, 24, 4, |inner| {
            proptest::collection::vec(inner, 0..4)
                .prop_map(|children| Tree::new(Vec::new(), children))
        })
    }

    proptest! {
        #[test]
        fn parse_encode_roundtrip(tree in arb_tree()) {
            prop_assert_eq!(parse_tree(tree.code()).unwrap(), tree);
        }

        #[test]
        fn forest_mul_commutative_associative(a in arb_tree(), b in arb_tree(), c in arb_tree()) {
            let (fa, fb, fc) = (Forest::single(a), Forest::single(b), Forest::single(c));
            prop_assert_eq!(fa.mul(&fb), fb.mul(&fa));
            prop_assert_eq!(fa.mul(&fb).mul(&fc), fa.mul(&fb.mul(&fc)));
            prop_assert_eq!(fa.mul(&Forest::empty()), fa);
        }

        #[test]
        fn grafting_roundtrip(a in arb_tree(), b in arb_tree()) {
            let forest = Forest::from_trees(vec![a, b]);
            prop_assert_eq!(root_branches(&make_tree(&forest)), forest);
        }
    }
}
