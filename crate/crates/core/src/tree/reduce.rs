use std::ops::Deref;

use num_traits::Zero;

use super::{validate, Inner, Node, Tree, VertexKind};
use crate::error::{Error, Result};

/// A metric tree without zero-length internal edges; the canonical
/// representative of its point in K_n or J_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedTree(Tree);

impl ReducedTree {
    pub fn into_tree(self) -> Tree {
        self.0
    }
}

impl Deref for ReducedTree {
    type Target = Tree;

    fn deref(&self) -> &Tree {
        &self.0
    }
}

/// Collapse every internal edge of length 0, uniting its end vertices.
pub fn reduce(tree: &Tree) -> Result<ReducedTree> {
    validate(tree).map_err(|v| Error::Invalid(v.to_string()))?;
    let root = match tree.root() {
        Node::Leaf => Node::Leaf,
        Node::Inner(v) => Node::Inner(reduce_vertex(v)?),
    };
    Ok(ReducedTree(Tree::from_root(root)))
}

fn reduce_vertex(v: &Inner) -> Result<Inner> {
    let mut children = Vec::with_capacity(v.children.len());
    for c in &v.children {
        match c {
            Node::Leaf => children.push(Node::Leaf),
            Node::Inner(ci) => {
                let r = reduce_vertex(ci)?;
                if r.length.as_ref().is_some_and(Zero::is_zero) {
                    children.extend(r.children);
                } else {
                    children.push(Node::Inner(r));
                }
            }
        }
    }
    let kind = merged_kind(v.kind, &children)?;
    Ok(Inner {
        kind,
        length: v.length.clone(),
        children,
    })
}

/// Vertex type after uniting: determined by the paint of the surviving
/// incoming edges and of the top vertex's outgoing edge.
fn merged_kind(top: VertexKind, children: &[Node]) -> Result<VertexKind> {
    let Some(out_painted) = top.outgoing_painted() else {
        return Ok(VertexKind::Plain);
    };
    let painted_in = children.iter().filter(|c| c.edge_painted()).count();
    match (out_painted, painted_in) {
        (false, 0) => Ok(VertexKind::TypeI),
        (true, 0) => Ok(VertexKind::TypeIII),
        (true, n) if n == children.len() => Ok(VertexKind::TypeII),
        _ => Err(Error::PaintedMerge(format!(
            "collapsing below a {top:?} vertex mixes painted and unpainted incoming edges"
        ))),
    }
}

/// Same point of K_n / J_n: the reductions coincide exactly.
pub fn equal_as_points(a: &Tree, b: &Tree) -> Result<bool> {
    if a.leaves() != b.leaves() || a.paint() != b.paint() {
        return Err(Error::Domain(format!(
            "cannot compare a {} tree with {} leaves and a {} tree with {} leaves",
            a.paint(),
            a.leaves(),
            b.paint(),
            b.leaves()
        )));
    }
    Ok(reduce(a)? == reduce(b)?)
}
