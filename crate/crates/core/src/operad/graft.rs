//! Grafting maps ∂_k(r,t), δ_k(r,t) and δ(t; r_1..r_t). The new internal edge
//! created at each identification has length 1.

use std::fmt;

use num_traits::One;

use crate::error::{domain, Error, Result};
use crate::rational::Rational;
use crate::tree::{validate, Node, Paint, Tree, VertexKind};

/// Which grafting map, with its indices. Leaf positions `k` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraftSpec {
    /// ∂_k(r,t): unpainted onto unpainted.
    Partial { k: usize, r: usize, t: usize },
    /// δ_k(r,t): unpainted onto the k-th leaf of a painted tree.
    UnpaintedOntoPainted { k: usize, r: usize, t: usize },
    /// δ(t; r_1..r_t): painted trees onto every leaf of an unpainted tree.
    PaintedOntoUnpainted { t: usize, rs: Vec<usize> },
}

impl GraftSpec {
    pub fn check(&self) -> Result<()> {
        match self {
            GraftSpec::Partial { k, r, t } => {
                if *r < 2 || *t < 2 || *k < 1 || k > r {
                    return domain(format!("{self} needs 1 <= k <= r, r >= 2, t >= 2"));
                }
            }
            GraftSpec::UnpaintedOntoPainted { k, r, t } => {
                if *r < 1 || *t < 2 || *k < 1 || k > r {
                    return domain(format!("{self} needs 1 <= k <= r, r >= 1, t >= 2"));
                }
            }
            GraftSpec::PaintedOntoUnpainted { t, rs } => {
                if *t < 2 || rs.len() != *t || rs.iter().any(|&r| r < 1) {
                    return domain(format!("{self} needs t >= 2 and t parts r_i >= 1"));
                }
            }
        }
        Ok(())
    }

    /// Leaf count of the result.
    pub fn leaves(&self) -> usize {
        match self {
            GraftSpec::Partial { r, t, .. } | GraftSpec::UnpaintedOntoPainted { r, t, .. } => {
                r + t - 1
            }
            GraftSpec::PaintedOntoUnpainted { rs, .. } => rs.iter().sum(),
        }
    }
}

impl fmt::Display for GraftSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraftSpec::Partial { k, r, t } => write!(f, "∂_{k}({r},{t})"),
            GraftSpec::UnpaintedOntoPainted { k, r, t } => write!(f, "δ_{k}({r},{t})"),
            GraftSpec::PaintedOntoUnpainted { t, rs } => {
                write!(f, "δ({t}")?;
                for r in rs {
                    write!(f, ",{r}")?;
                }
                f.write_str(")")
            }
        }
    }
}

fn expect(tree: &Tree, paint: Paint, leaves: usize, role: &str) -> Result<()> {
    validate(tree).map_err(|v| Error::Invalid(format!("{role}: {v}")))?;
    if tree.paint() != paint || tree.leaves() != leaves {
        return domain(format!(
            "{role} must be a {paint} tree with {leaves} leaves, got {} with {}",
            tree.paint(),
            tree.leaves()
        ));
    }
    Ok(())
}

/// Retype every vertex of an unpainted subtree.
fn repaint(node: &Node, kind: VertexKind) -> Node {
    match node {
        Node::Leaf => Node::Leaf,
        Node::Inner(v) => Node::inner(
            kind,
            v.length.clone(),
            v.children.iter().map(|c| repaint(c, kind)).collect(),
        ),
    }
}

fn with_unit_length(mut node: Node) -> Node {
    if let Node::Inner(v) = &mut node {
        v.length = Some(Rational::one());
    }
    node
}

fn graft_at(outer: &Tree, k: usize, inner: Node) -> Tree {
    let mut root = outer.root().clone();
    let mut slot = Some(with_unit_length(inner));
    root.replace_leaf(k - 1, &mut slot);
    debug_assert!(slot.is_none());
    Tree::from_root(root)
}

/// ∂_k(r,t)(ρ, τ): identify the root edge of τ with the k-th leaf edge of ρ.
pub fn graft_k(k: usize, rho: &Tree, tau: &Tree) -> Result<Tree> {
    let spec = GraftSpec::Partial {
        k,
        r: rho.leaves(),
        t: tau.leaves(),
    };
    spec.check()?;
    expect(rho, Paint::Unpainted, rho.leaves(), "ρ")?;
    expect(tau, Paint::Unpainted, tau.leaves(), "τ")?;
    Ok(graft_at(rho, k, tau.root().clone()))
}

/// δ_k(r,t)(ρ, τ): ρ painted, τ unpainted; τ's edges stay unpainted.
pub fn graft_jk(k: usize, rho: &Tree, tau: &Tree) -> Result<Tree> {
    let spec = GraftSpec::UnpaintedOntoPainted {
        k,
        r: rho.leaves(),
        t: tau.leaves(),
    };
    spec.check()?;
    expect(rho, Paint::Painted, rho.leaves(), "ρ")?;
    expect(tau, Paint::Unpainted, tau.leaves(), "τ")?;
    Ok(graft_at(rho, k, repaint(tau.root(), VertexKind::TypeI)))
}

/// δ(t; r_1..r_t)(τ, ρ_1..ρ_t): τ unpainted with t leaves becomes painted,
/// ρ_i painted grafted at its i-th leaf.
pub fn graft_kj(tau: &Tree, rhos: &[Tree]) -> Result<Tree> {
    let spec = GraftSpec::PaintedOntoUnpainted {
        t: tau.leaves(),
        rs: rhos.iter().map(Tree::leaves).collect(),
    };
    if rhos.len() != tau.leaves() {
        return domain(format!(
            "δ needs one painted tree per leaf of τ: {} leaves, {} trees",
            tau.leaves(),
            rhos.len()
        ));
    }
    spec.check()?;
    expect(tau, Paint::Unpainted, tau.leaves(), "τ")?;
    for (i, rho) in rhos.iter().enumerate() {
        expect(rho, Paint::Painted, rho.leaves(), &format!("ρ_{}", i + 1))?;
    }
    let mut rest = rhos.iter().map(|r| with_unit_length(r.root().clone()));
    Ok(Tree::from_root(fill_leaves(tau.root(), &mut rest)))
}

fn fill_leaves(node: &Node, rest: &mut impl Iterator<Item = Node>) -> Node {
    match node {
        Node::Leaf => rest.next().expect("one graft per leaf"),
        Node::Inner(v) => Node::inner(
            VertexKind::TypeII,
            v.length.clone(),
            v.children.iter().map(|c| fill_leaves(c, rest)).collect(),
        ),
    }
}

/// Dispatch on a [`GraftSpec`]. `trees` holds the outer operand first.
pub fn graft(spec: &GraftSpec, trees: &[Tree]) -> Result<Tree> {
    let out = match (spec, trees) {
        (GraftSpec::Partial { k, r, t }, [rho, tau]) => {
            if rho.leaves() != *r || tau.leaves() != *t {
                return domain(format!("operands do not match {spec}"));
            }
            graft_k(*k, rho, tau)?
        }
        (GraftSpec::UnpaintedOntoPainted { k, r, t }, [rho, tau]) => {
            if rho.leaves() != *r || tau.leaves() != *t {
                return domain(format!("operands do not match {spec}"));
            }
            graft_jk(*k, rho, tau)?
        }
        (GraftSpec::PaintedOntoUnpainted { t, rs }, [tau, rhos @ ..]) => {
            let got: Vec<usize> = rhos.iter().map(Tree::leaves).collect();
            if tau.leaves() != *t || &got != rs {
                return domain(format!("operands do not match {spec}"));
            }
            graft_kj(tau, rhos)?
        }
        _ => return domain(format!("wrong number of operands for {spec}")),
    };
    Ok(out)
}
