//! Shape enumeration. All lists come back sorted by canonical encoding.

use super::{Node, Tree, VertexKind};
use crate::combinat::{compositions, product};
use crate::error::{domain, Result};
use crate::rational::Rational;

/// Subtrees with `n` leaves whose vertices are all `kind`, arity exactly 2.
fn binary_nodes(n: usize, kind: VertexKind) -> Vec<Node> {
    if n == 1 {
        return vec![Node::Leaf];
    }
    let mut out = Vec::new();
    for left in 1..n {
        let ls = binary_nodes(left, kind);
        let rs = binary_nodes(n - left, kind);
        for l in &ls {
            for r in &rs {
                out.push(Node::inner(kind, None, vec![l.clone(), r.clone()]));
            }
        }
    }
    out
}

fn planar_nodes(n: usize, kind: VertexKind) -> Vec<Node> {
    if n == 1 {
        return vec![Node::Leaf];
    }
    let mut out = Vec::new();
    for parts in (2..=n).flat_map(|p| compositions(n, p)) {
        let lists: Vec<Vec<Node>> = parts.iter().map(|&p| planar_nodes(p, kind)).collect();
        for children in product(&lists) {
            out.push(Node::inner(kind, None, children));
        }
    }
    out
}

fn sorted(nodes: Vec<Node>) -> Vec<Tree> {
    let mut trees: Vec<(String, Tree)> = nodes
        .into_iter()
        .map(Tree::from_root)
        .map(|t| (t.encode(), t))
        .collect();
    trees.sort_by(|a, b| a.0.cmp(&b.0));
    trees.dedup_by(|a, b| a.0 == b.0);
    trees.into_iter().map(|(_, t)| t).collect()
}

/// T_n: binary unpainted trees with `n >= 2` leaves.
pub fn binary_unpainted(n: usize) -> Result<Vec<Tree>> {
    if n < 2 {
        return domain(format!("binary unpainted trees need n >= 2, got {n}"));
    }
    Ok(sorted(binary_nodes(n, VertexKind::Plain)))
}

/// Unpainted trees with `n >= 2` leaves and all arities at least 2.
pub fn planar_trees(n: usize) -> Result<Vec<Tree>> {
    if n < 2 {
        return domain(format!("planar trees need n >= 2, got {n}"));
    }
    Ok(sorted(planar_nodes(n, VertexKind::Plain)))
}

/// Binary painted subtrees whose outgoing edge is painted.
fn painted_binary_nodes(n: usize) -> Vec<Node> {
    let mut out: Vec<Node> = binary_nodes(n, VertexKind::TypeI)
        .into_iter()
        .map(|u| Node::inner(VertexKind::TypeIII, None, vec![u]))
        .collect();
    for left in 1..n {
        let ls = painted_binary_nodes(left);
        let rs = painted_binary_nodes(n - left);
        for l in &ls {
            for r in &rs {
                out.push(Node::inner(
                    VertexKind::TypeII,
                    None,
                    vec![l.clone(), r.clone()],
                ));
            }
        }
    }
    out
}

/// Binary painted tree shapes with `n >= 1` leaves.
pub fn binary_painted_shapes(n: usize) -> Result<Vec<Tree>> {
    if n < 1 {
        return domain("binary painted trees need n >= 1");
    }
    Ok(sorted(painted_binary_nodes(n)))
}

/// Every metric tree on `shape` whose internal-edge lengths are drawn from
/// `samples`, in lexicographic order of the pre-order length vector.
pub fn metric_points(shape: &Tree, samples: &[Rational]) -> Vec<Tree> {
    let edges = shape.internal_edges();
    let choices = vec![samples.to_vec(); edges];
    product(&choices)
        .into_iter()
        .map(|ls| {
            shape
                .with_lengths(ls)
                .expect("length vector matches the edge count")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::tree::validate;

    fn encodings(ts: &[Tree]) -> Vec<String> {
        ts.iter().map(Tree::encode).collect()
    }

    #[test]
    fn small_binary() {
        assert_eq!(encodings(&binary_unpainted(2).unwrap()), ["(* *)"]);
        assert_eq!(
            encodings(&binary_unpainted(3).unwrap()),
            ["((* *) *)", "(* (* *))"]
        );
        assert_eq!(binary_unpainted(4).unwrap().len(), 5);
        assert_eq!(binary_unpainted(5).unwrap().len(), 14);
        assert!(binary_unpainted(1).is_err());
    }

    #[test]
    fn small_planar() {
        assert_eq!(planar_trees(2).unwrap().len(), 1);
        assert_eq!(
            encodings(&planar_trees(3).unwrap()),
            ["((* *) *)", "(* (* *))", "(* * *)"]
        );
        assert_eq!(planar_trees(4).unwrap().len(), 11);
        assert!(planar_trees(0).is_err());
    }

    #[test]
    fn small_painted() {
        assert_eq!(encodings(&binary_painted_shapes(1).unwrap()), ["b(*)"]);
        assert_eq!(
            encodings(&binary_painted_shapes(2).unwrap()),
            ["b(u(* *))", "p(b(*) b(*))"]
        );
        let three = binary_painted_shapes(3).unwrap();
        assert_eq!(three.len(), 6);
        for t in &three {
            assert_eq!(validate(t), Ok(()));
            assert!(t.is_binary());
        }
        assert!(binary_painted_shapes(0).is_err());
    }

    #[test]
    fn metric_assignments() {
        let shape = Tree::parse("((* *) (* *))").unwrap();
        let pts = metric_points(&shape, &[frac(0, 1), frac(1, 2), frac(1, 1)]);
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[1].encode(), "((* *)@0 (* *)@1/2)");
        let corolla = Tree::corolla(VertexKind::Plain, 3);
        assert_eq!(metric_points(&corolla, &[frac(1, 2)]), vec![corolla]);
    }
}
