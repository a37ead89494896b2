//! Planted plane trees, unpainted and painted, with optional metric data.
//!
//! A tree is stored top-down from the root vertex. Each non-root internal
//! vertex carries the length of its outgoing edge (`None` for bare shapes),
//! so leaf edges and the root edge never hold a length. Painting is encoded
//! in the vertex kinds: the edge above a leaf or a type I vertex is
//! unpainted, the edge above a type II or type III vertex is painted.

mod enumerate;
mod grammar;
mod reduce;
mod validate;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub use enumerate::{binary_painted_shapes, binary_unpainted, metric_points, planar_trees};
pub use reduce::{equal_as_points, reduce, ReducedTree};
pub use validate::{validate, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Paint {
    Unpainted,
    Painted,
}

impl fmt::Display for Paint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Paint::Unpainted => "unpainted",
            Paint::Painted => "painted",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    /// Vertex of an unpainted tree.
    Plain,
    /// All edges unpainted.
    TypeI,
    /// All edges painted.
    TypeII,
    /// Unpainted incoming edges, painted outgoing edge.
    TypeIII,
}

impl VertexKind {
    /// Paint of the outgoing edge. `None` for vertices of unpainted trees.
    pub fn outgoing_painted(self) -> Option<bool> {
        match self {
            VertexKind::Plain => None,
            VertexKind::TypeI => Some(false),
            VertexKind::TypeII | VertexKind::TypeIII => Some(true),
        }
    }

    pub(crate) fn prefix(self) -> &'static str {
        match self {
            VertexKind::Plain => "",
            VertexKind::TypeI => "u",
            VertexKind::TypeII => "p",
            VertexKind::TypeIII => "b",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Inner {
    pub kind: VertexKind,
    /// Length of the outgoing edge; always `None` at the root.
    pub length: Option<Rational>,
    pub children: Vec<Node>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Node {
    Leaf,
    Inner(Inner),
}

impl Node {
    pub fn inner(kind: VertexKind, length: Option<Rational>, children: Vec<Node>) -> Node {
        Node::Inner(Inner {
            kind,
            length,
            children,
        })
    }

    pub fn leaves(&self) -> usize {
        match self {
            Node::Leaf => 1,
            Node::Inner(v) => v.children.iter().map(Node::leaves).sum(),
        }
    }

    /// Paint of the edge above this node inside a painted tree.
    pub fn edge_painted(&self) -> bool {
        match self {
            Node::Leaf => false,
            Node::Inner(v) => v.kind.outgoing_painted().unwrap_or(false),
        }
    }

    fn vertices(&self) -> usize {
        match self {
            Node::Leaf => 0,
            Node::Inner(v) => 1 + v.children.iter().map(Node::vertices).sum::<usize>(),
        }
    }

    fn for_each_inner<'a>(&'a self, f: &mut impl FnMut(&'a Inner)) {
        if let Node::Inner(v) = self {
            f(v);
            for c in &v.children {
                c.for_each_inner(f);
            }
        }
    }

    fn for_each_inner_mut(&mut self, f: &mut impl FnMut(&mut Inner)) {
        if let Node::Inner(v) = self {
            f(v);
            for c in &mut v.children {
                c.for_each_inner_mut(f);
            }
        }
    }

    /// Replace the `k`-th leaf (0-based, left to right) by `graft`. Returns
    /// the leaf count seen so the recursion can track the offset.
    pub(crate) fn replace_leaf(&mut self, k: usize, graft: &mut Option<Node>) -> usize {
        match self {
            Node::Leaf => {
                if k == 0 {
                    if let Some(g) = graft.take() {
                        *self = g;
                    }
                }
                1
            }
            Node::Inner(v) => {
                let mut seen = 0;
                for c in &mut v.children {
                    if graft.is_none() {
                        break;
                    }
                    if k >= seen {
                        seen += c.replace_leaf(k - seen, graft);
                    }
                }
                seen
            }
        }
    }
}

/// A planted plane tree, possibly painted, possibly metric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    root: Node,
}

impl Tree {
    pub fn from_root(root: Node) -> Tree {
        Tree { root }
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn into_root(self) -> Node {
        self.root
    }

    /// Corolla of an unpainted tree (`kind = Plain`) or a painted corolla
    /// of the given kind, with `n` leaves.
    pub fn corolla(kind: VertexKind, n: usize) -> Tree {
        Tree::from_root(Node::inner(kind, None, vec![Node::Leaf; n]))
    }

    pub fn paint(&self) -> Paint {
        match &self.root {
            Node::Inner(v) if v.kind != VertexKind::Plain => Paint::Painted,
            _ => Paint::Unpainted,
        }
    }

    pub fn leaves(&self) -> usize {
        self.root.leaves()
    }

    /// Number of internal vertices.
    pub fn vertices(&self) -> usize {
        self.root.vertices()
    }

    /// Number of internal edges.
    pub fn internal_edges(&self) -> usize {
        self.vertices().saturating_sub(1)
    }

    /// Lengths of the internal edges in pre-order; `None` entries for bare
    /// edges.
    pub fn lengths(&self) -> Vec<Option<&Rational>> {
        let mut out = Vec::new();
        let mut first = true;
        self.root.for_each_inner(&mut |v| {
            if !std::mem::take(&mut first) {
                out.push(v.length.as_ref());
            }
        });
        out
    }

    /// Every internal edge has a length.
    pub fn is_metric(&self) -> bool {
        self.lengths().iter().all(Option::is_some)
    }

    /// Binary in the sense of the tree's paint: arity 2 everywhere for
    /// unpainted trees; arity 2 at type I/II and arity 1 at type III vertices
    /// for painted trees.
    pub fn is_binary(&self) -> bool {
        let mut ok = true;
        self.root.for_each_inner(&mut |v| {
            let want = if v.kind == VertexKind::TypeIII { 1 } else { 2 };
            ok &= v.children.len() == want;
        });
        ok
    }

    /// Drop all lengths.
    pub fn shape(&self) -> Tree {
        let mut t = self.clone();
        t.root.for_each_inner_mut(&mut |v| v.length = None);
        t
    }

    /// Assign lengths to the internal edges in pre-order.
    pub fn with_lengths<I>(&self, lengths: I) -> Result<Tree>
    where
        I: IntoIterator<Item = Rational>,
    {
        let mut t = self.clone();
        let mut it = lengths.into_iter();
        let mut first = true;
        let mut missing = false;
        t.root.for_each_inner_mut(&mut |v| {
            if std::mem::take(&mut first) {
                return;
            }
            match it.next() {
                Some(l) => v.length = Some(l),
                None => missing = true,
            }
        });
        if missing {
            return Err(Error::Domain(
                "too few lengths for the internal edges".into(),
            ));
        }
        if it.next().is_some() {
            return Err(Error::Domain(
                "too many lengths for the internal edges".into(),
            ));
        }
        Ok(t)
    }

    /// Apply `f` to every internal edge length.
    pub fn map_lengths(&self, f: impl Fn(&Rational) -> Rational) -> Tree {
        let mut t = self.clone();
        t.root.for_each_inner_mut(&mut |v| {
            if let Some(l) = &v.length {
                v.length = Some(f(l));
            }
        });
        t
    }

    /// Length of the longest internal edge, or 0 when there is none.
    pub fn max_internal_length(&self) -> Rational {
        self.lengths()
            .into_iter()
            .flatten()
            .max()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Canonical bracket encoding.
    pub fn encode(&self) -> String {
        let mut s = String::new();
        grammar::write_node(&self.root, &mut s);
        s
    }

    pub fn parse(s: &str) -> Result<Tree> {
        grammar::parse(s)
    }

    pub fn to_json(&self) -> TreeJson {
        TreeJson {
            kind: self.paint(),
            leaves: self.leaves(),
            encoding: self.encode(),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tree> {
        Tree::parse(s)
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Trees order by their canonical encodings.
impl Ord for Tree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.encode().cmp(&other.encode())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub kind: Paint,
    pub leaves: usize,
    pub encoding: String,
}
