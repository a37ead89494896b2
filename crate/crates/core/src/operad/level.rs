//! Level-trees.
//!
//! A painted metric tree τ is a level-tree when M(τ) = 0, or when the
//! rescaled tree τ̃ (every length divided by M(τ)) is δ_k(ρ, σ) for a
//! level-tree ρ and unpainted σ, or δ(ρ'; σ'_1..σ'_r) for unpainted ρ' and
//! level-trees σ'_i. The search below tries every cut realizing either
//! pattern: single unpainted length-1 edges first, in pre-order, then
//! every root crust of type II vertices whose boundary edges all have
//! length 1.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::tree::{validate, Inner, Node, Paint, Tree, VertexKind};

/// How a level-tree decomposes. Trees are given with respect to τ̃.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelWitness {
    /// M(τ) = 0.
    Flat,
    /// τ̃ = δ_k(r,s)(ρ, σ).
    Unpainted { k: usize, rho: Tree, sigma: Tree },
    /// τ̃ = δ(r; s_1..s_r)(base, factors).
    Painted { base: Tree, factors: Vec<Tree> },
}

/// Memoizing decision procedure. The memo is keyed by the canonical
/// encoding of the rescaled tree, so one tester can be reused across many
/// queries on the same thread.
#[derive(Debug, Default)]
pub struct LevelTester {
    memo: HashMap<String, bool>,
    depth: usize,
    max_depth: usize,
}

impl LevelTester {
    pub fn new() -> Self {
        Self::default()
    }

    /// Deepest recursion reached so far.
    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    /// False for anything that is not a valid painted metric tree.
    pub fn is_level(&mut self, tree: &Tree) -> bool {
        if !admissible(tree) {
            return false;
        }
        let m = tree.max_internal_length();
        if m.is_zero() {
            return true;
        }
        let tilde = tree.map_lengths(|l| l / &m);
        let key = tilde.encode();
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let ans = self.decompose_rescaled(&tilde).is_some();
        self.memo.insert(key, ans);
        ans
    }

    /// Witness decomposition, or `None` when the tree is not a level-tree.
    pub fn decompose(&mut self, tree: &Tree) -> Option<LevelWitness> {
        if !admissible(tree) {
            return None;
        }
        let m = tree.max_internal_length();
        if m.is_zero() {
            return Some(LevelWitness::Flat);
        }
        let tilde = tree.map_lengths(|l| l / &m);
        self.decompose_rescaled(&tilde)
    }

    fn decompose_rescaled(&mut self, tilde: &Tree) -> Option<LevelWitness> {
        self.depth += 1;
        self.max_depth = self.max_depth.max(self.depth);
        let out = self.search(tilde);
        self.depth -= 1;
        out
    }

    fn search(&mut self, tilde: &Tree) -> Option<LevelWitness> {
        for (k, rho, sigma) in unpainted_cuts(tilde) {
            if self.is_level(&rho) {
                return Some(LevelWitness::Unpainted { k, rho, sigma });
            }
        }
        let Node::Inner(root) = tilde.root() else {
            return None;
        };
        if root.kind != VertexKind::TypeII {
            return None;
        }
        for (base, factors) in crusts(root) {
            let factors: Vec<Tree> = factors.into_iter().map(Tree::from_root).collect();
            if factors.iter().all(|f| self.is_level(f)) {
                return Some(LevelWitness::Painted {
                    base: Tree::from_root(base),
                    factors,
                });
            }
        }
        None
    }
}

fn admissible(tree: &Tree) -> bool {
    tree.paint() == Paint::Painted && tree.is_metric() && validate(tree).is_ok()
}

pub fn is_level_tree(tree: &Tree) -> bool {
    LevelTester::new().is_level(tree)
}

pub fn level_decomposition(tree: &Tree) -> Option<LevelWitness> {
    LevelTester::new().decompose(tree)
}

fn is_unit(v: &Inner) -> bool {
    v.length.as_ref().is_some_and(One::is_one)
}

fn strip_root_length(node: &Node) -> Node {
    let mut n = node.clone();
    if let Node::Inner(v) = &mut n {
        v.length = None;
    }
    n
}

fn as_plain(node: &Node) -> Node {
    match node {
        Node::Leaf => Node::Leaf,
        Node::Inner(v) => Node::inner(
            VertexKind::Plain,
            v.length.clone(),
            v.children.iter().map(as_plain).collect(),
        ),
    }
}

/// Every type I vertex whose outgoing edge has length 1, cut off:
/// (k, ρ, σ) with σ grafted at leaf k of ρ.
fn unpainted_cuts(tree: &Tree) -> Vec<(usize, Tree, Tree)> {
    // paths to cut points, with the index of the leftmost leaf below
    fn walk(
        node: &Node,
        path: &mut Vec<usize>,
        offset: &mut usize,
        out: &mut Vec<(Vec<usize>, usize)>,
    ) {
        match node {
            Node::Leaf => *offset += 1,
            Node::Inner(v) => {
                if v.kind == VertexKind::TypeI && is_unit(v) {
                    out.push((path.clone(), *offset + 1));
                }
                for (i, c) in v.children.iter().enumerate() {
                    path.push(i);
                    walk(c, path, offset, out);
                    path.pop();
                }
            }
        }
    }
    let mut sites = Vec::new();
    walk(tree.root(), &mut Vec::new(), &mut 0, &mut sites);
    sites
        .into_iter()
        .map(|(path, k)| {
            let mut root = tree.root().clone();
            let mut slot = &mut root;
            for i in path {
                let Node::Inner(v) = slot else { unreachable!() };
                slot = &mut v.children[i];
            }
            let cut = std::mem::replace(slot, Node::Leaf);
            let sigma = Tree::from_root(strip_root_length(&as_plain(&cut)));
            (k, Tree::from_root(root), sigma)
        })
        .collect()
}

/// Root crusts below a type II vertex: each child is either cut (its edge
/// must have length 1) or, if type II itself, absorbed into the crust.
/// Returns (base subtree, factors cut below it) pairs.
fn crusts(v: &Inner) -> Vec<(Node, Vec<Node>)> {
    let mut per_child: Vec<Vec<(Node, Vec<Node>)>> = Vec::with_capacity(v.children.len());
    for c in &v.children {
        let Node::Inner(ci) = c else {
            return Vec::new();
        };
        let mut opts = Vec::new();
        if is_unit(ci) {
            opts.push((Node::Leaf, vec![strip_root_length(c)]));
        }
        if ci.kind == VertexKind::TypeII {
            for (base, factors) in crusts(ci) {
                let base = match base {
                    Node::Inner(mut b) => {
                        b.length = ci.length.clone();
                        Node::Inner(b)
                    }
                    leaf => leaf,
                };
                opts.push((base, factors));
            }
        }
        if opts.is_empty() {
            return Vec::new();
        }
        per_child.push(opts);
    }
    let mut acc: Vec<(Vec<Node>, Vec<Node>)> = vec![(Vec::new(), Vec::new())];
    for opts in per_child {
        let mut next = Vec::with_capacity(acc.len() * opts.len());
        for (children, factors) in &acc {
            for (base, fs) in &opts {
                let mut c = children.clone();
                c.push(base.clone());
                let mut f = factors.clone();
                f.extend(fs.iter().cloned());
                next.push((c, f));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(children, factors)| (Node::inner(VertexKind::Plain, None, children), factors))
        .collect()
}
