use std::fmt;

use super::{Inner, Node, Paint, Tree, VertexKind};
use crate::rational;

/// First violated clause of the tree definitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooFewLeaves {
        paint: Paint,
        leaves: usize,
    },
    /// Unpainted vertex with a single incoming edge.
    VertexWithTwoEdges,
    MixedPaintKinds,
    RootEdgeUnpainted,
    TypeIIncomingPainted,
    TypeIIIncomingUnpainted,
    TypeIIIIncomingPainted,
    ArityTooSmall(VertexKind),
    /// Some internal edges carry lengths and others do not.
    PartialMetric,
    RootLength,
    LengthOutOfRange(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewLeaves { paint, leaves } => {
                write!(f, "{paint} tree with {leaves} leaves is too small")
            }
            Violation::VertexWithTwoEdges => f.write_str("vertex with exactly two edges"),
            Violation::MixedPaintKinds => {
                f.write_str("unpainted and painted vertices mixed in one tree")
            }
            Violation::RootEdgeUnpainted => f.write_str("root edge must be painted"),
            Violation::TypeIIncomingPainted => {
                f.write_str("type I vertex with a painted incoming edge")
            }
            Violation::TypeIIIncomingUnpainted => {
                f.write_str("type II vertex with an unpainted incoming edge")
            }
            Violation::TypeIIIIncomingPainted => {
                f.write_str("type III vertex with a painted incoming edge")
            }
            Violation::ArityTooSmall(k) => {
                write!(f, "{k:?} vertex needs at least two incoming edges")
            }
            Violation::PartialMetric => f.write_str("some internal edges lack a length"),
            Violation::RootLength => f.write_str("the root edge carries no length"),
            Violation::LengthOutOfRange(l) => write!(f, "length {l} outside [0,1]"),
        }
    }
}

impl std::error::Error for Violation {}

/// Check every structural invariant; `Err` names the first violation found
/// in pre-order.
pub fn validate(tree: &Tree) -> Result<(), Violation> {
    let paint = tree.paint();
    let leaves = tree.leaves();
    let min = match paint {
        Paint::Unpainted => 2,
        Paint::Painted => 1,
    };
    if leaves < min || matches!(tree.root(), Node::Leaf) {
        return Err(Violation::TooFewLeaves { paint, leaves });
    }
    let Node::Inner(root) = tree.root() else {
        unreachable!()
    };
    if root.length.is_some() {
        return Err(Violation::RootLength);
    }
    if root.kind == VertexKind::TypeI {
        return Err(Violation::RootEdgeUnpainted);
    }
    vertex(root, paint)?;
    let lengths = tree.lengths();
    let some = lengths.iter().filter(|l| l.is_some()).count();
    if some != 0 && some != lengths.len() {
        return Err(Violation::PartialMetric);
    }
    for l in lengths.into_iter().flatten() {
        if !rational::in_unit_interval(l) {
            return Err(Violation::LengthOutOfRange(rational::format(l)));
        }
    }
    Ok(())
}

fn vertex(v: &Inner, paint: Paint) -> Result<(), Violation> {
    let plain = v.kind == VertexKind::Plain;
    if plain != (paint == Paint::Unpainted) {
        return Err(Violation::MixedPaintKinds);
    }
    let arity = v.children.len();
    match v.kind {
        VertexKind::Plain if arity < 2 => return Err(Violation::VertexWithTwoEdges),
        VertexKind::TypeI | VertexKind::TypeII if arity < 2 => {
            return Err(Violation::ArityTooSmall(v.kind))
        }
        _ => {}
    }
    for c in &v.children {
        if let Node::Inner(ci) = c {
            if (ci.kind == VertexKind::Plain) != plain {
                return Err(Violation::MixedPaintKinds);
            }
        }
        let painted = c.edge_painted();
        match v.kind {
            VertexKind::TypeI if painted => return Err(Violation::TypeIIncomingPainted),
            VertexKind::TypeII if !painted => return Err(Violation::TypeIIIncomingUnpainted),
            VertexKind::TypeIII if painted => return Err(Violation::TypeIIIIncomingPainted),
            _ => {}
        }
        if let Node::Inner(ci) = c {
            vertex(ci, paint)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(s: &str) -> Result<(), Violation> {
        validate(&s.parse().unwrap())
    }

    #[test]
    fn valid_trees() {
        for s in [
            "(* *)",
            "((* *)@1/2 *)",
            "b(*)",
            "b(u(* *))",
            "p(b(*) b(*))",
            "p(b(*)@1 b(*)@1/2)",
            "b(* * u(* *)@0)",
        ] {
            assert_eq!(check(s), Ok(()), "{s}");
        }
    }

    #[test]
    fn unary_unpainted_vertex() {
        let e = check("((* *) (*))").unwrap_err();
        assert_eq!(e, Violation::VertexWithTwoEdges);
        assert_eq!(e.to_string(), "vertex with exactly two edges");
    }

    #[test]
    fn unpainted_root_edge() {
        let e = check("u(* *)").unwrap_err();
        assert_eq!(e.to_string(), "root edge must be painted");
    }

    #[test]
    fn vertex_type_clauses() {
        assert_eq!(check("p(* *)"), Err(Violation::TypeIIIncomingUnpainted));
        assert_eq!(check("b(b(*))"), Err(Violation::TypeIIIIncomingPainted));
        assert_eq!(check("b(u(b(*) *))"), Err(Violation::TypeIIncomingPainted));
        assert_eq!(
            check("p(b(*))"),
            Err(Violation::ArityTooSmall(VertexKind::TypeII))
        );
        assert_eq!(
            check("b(u(*))"),
            Err(Violation::ArityTooSmall(VertexKind::TypeI))
        );
        assert_eq!(check("b((* *))"), Err(Violation::MixedPaintKinds));
    }

    #[test]
    fn sizes_and_lengths() {
        assert!(matches!(check("*"), Err(Violation::TooFewLeaves { .. })));
        assert!(matches!(check("(*)"), Err(Violation::TooFewLeaves { .. })));
        assert_eq!(check("(((* *)@1/2 *) *)"), Err(Violation::PartialMetric));
        assert_eq!(
            check("((* *)@3/2 *)"),
            Err(Violation::LengthOutOfRange("3/2".into()))
        );
    }
}
