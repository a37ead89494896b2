//! Cell boundaries with signs.
//!
//! A tree shape is the product of one polytope per vertex: K_a for a vertex
//! of arity `a` in an unpainted tree or a type I/II vertex, J_a for a type III
//! vertex. The product is oriented by taking factors in pre-order. The
//! boundary is the Leibniz sum over factors, each factor's corolla facet
//! substituted in place, with a Koszul sign for moving the new factors
//! into pre-order.
//!
//! Corolla facet signs are found once per (kind, arity) by walking the
//! ridge graph: every ridge lies in exactly two facets and must cancel.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::combinat::compositions;
use crate::error::{Error, Result};
use crate::tree::{Node, Tree, VertexKind};

/// Dimension of the polytope attached to a vertex.
pub(crate) fn vertex_dim(kind: VertexKind, arity: usize) -> usize {
    match kind {
        VertexKind::TypeIII => arity - 1,
        _ => arity - 2,
    }
}

pub(crate) fn cell_dim(tree: &Tree) -> usize {
    fn go(n: &Node) -> usize {
        match n {
            Node::Leaf => 0,
            Node::Inner(v) => {
                vertex_dim(v.kind, v.children.len()) + v.children.iter().map(go).sum::<usize>()
            }
        }
    }
    go(tree.root())
}

/// Tree shape whose vertices carry a position tag.
#[derive(Debug, Clone)]
enum Sh {
    Leaf,
    V {
        kind: VertexKind,
        tag: usize,
        children: Vec<Sh>,
    },
}

impl Sh {
    fn from_node(node: &Node, next: &mut usize) -> Sh {
        match node {
            Node::Leaf => Sh::Leaf,
            Node::Inner(v) => {
                let tag = *next;
                *next += 1;
                let children = v.children.iter().map(|c| Sh::from_node(c, next)).collect();
                Sh::V {
                    kind: v.kind,
                    tag,
                    children,
                }
            }
        }
    }

    fn to_node(&self) -> Node {
        match self {
            Sh::Leaf => Node::Leaf,
            Sh::V { kind, children, .. } => {
                Node::inner(*kind, None, children.iter().map(Sh::to_node).collect())
            }
        }
    }

    fn tags(&self, out: &mut Vec<usize>) {
        if let Sh::V { tag, children, .. } = self {
            out.push(*tag);
            for c in children {
                c.tags(out);
            }
        }
    }

    /// (kind, arity) of each vertex in pre-order.
    fn vertices(&self, out: &mut Vec<(VertexKind, usize)>) {
        if let Sh::V { kind, children, .. } = self {
            out.push((*kind, children.len()));
            for c in children {
                c.vertices(out);
            }
        }
    }

    fn retype(&self, to: VertexKind) -> Sh {
        match self {
            Sh::Leaf => Sh::Leaf,
            Sh::V { tag, children, .. } => Sh::V {
                kind: to,
                tag: *tag,
                children: children.iter().map(|c| c.retype(to)).collect(),
            },
        }
    }

    /// Replace vertex `target` with `facet`, whose leaves receive the
    /// vertex's children. Tags become positions in the induced order.
    fn substitute(&self, target: usize, facet: &Sh, width: usize) -> Sh {
        match self {
            Sh::Leaf => Sh::Leaf,
            Sh::V {
                kind,
                tag,
                children,
            } => {
                let children: Vec<Sh> = children
                    .iter()
                    .map(|c| c.substitute(target, facet, width))
                    .collect();
                if *tag == target {
                    facet.plug(target, &mut children.into_iter())
                } else {
                    Sh::V {
                        kind: *kind,
                        tag: if *tag > target { tag + width - 1 } else { *tag },
                        children,
                    }
                }
            }
        }
    }

    fn plug(&self, offset: usize, rest: &mut impl Iterator<Item = Sh>) -> Sh {
        match self {
            Sh::Leaf => rest.next().expect("one child per facet leaf"),
            Sh::V {
                kind,
                tag,
                children,
            } => Sh::V {
                kind: *kind,
                tag: tag + offset,
                children: children.iter().map(|c| c.plug(offset, rest)).collect(),
            },
        }
    }
}

fn corolla_sh(kind: VertexKind, tag: usize, arity: usize) -> Sh {
    Sh::V {
        kind,
        tag,
        children: vec![Sh::Leaf; arity],
    }
}

fn with_child(kind: VertexKind, arity: usize, k: usize, child: Sh) -> Sh {
    let mut children = vec![Sh::Leaf; arity];
    children[k] = child;
    Sh::V {
        kind,
        tag: 0,
        children,
    }
}

/// Codimension-one faces of the K_a corolla, tagged in pre-order.
fn k_facets(kind: VertexKind, a: usize) -> Vec<Sh> {
    let mut out = Vec::new();
    for r in 2..a {
        let t = a - r + 1;
        for k in 0..r {
            out.push(with_child(kind, r, k, corolla_sh(kind, 1, t)));
        }
    }
    out
}

/// Codimension-one faces of the J_a corolla: δ_k(r,t) and δ(t; r_1..r_t).
fn j_facets(a: usize) -> Vec<Sh> {
    let mut out = Vec::new();
    for r in 1..a {
        let t = a - r + 1;
        for k in 0..r {
            out.push(with_child(
                VertexKind::TypeIII,
                r,
                k,
                corolla_sh(VertexKind::TypeI, 1, t),
            ));
        }
    }
    for t in 2..=a {
        for rs in compositions(a, t) {
            let children = rs
                .iter()
                .enumerate()
                .map(|(i, &r)| corolla_sh(VertexKind::TypeIII, i + 1, r))
                .collect();
            out.push(Sh::V {
                kind: VertexKind::TypeII,
                tag: 0,
                children,
            });
        }
    }
    out
}

/// Sign of reordering factors: (-1)^(number of inverted odd/odd pairs).
fn koszul(order: &[usize], dims: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for (x, &a) in order.iter().enumerate() {
        if dims[a].is_multiple_of(2) {
            continue;
        }
        for &b in &order[x + 1..] {
            if b < a && dims[b] % 2 == 1 {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Signed corolla facets for every vertex type up to a maximum arity.
#[derive(Debug, Clone, Default)]
pub(crate) struct Orientation {
    facets: HashMap<(VertexKind, usize), Vec<(Sh, i64)>>,
}

impl Orientation {
    pub(crate) fn new(max_arity: usize) -> Result<Orientation> {
        let mut o = Orientation::default();
        for a in 2..=max_arity {
            let signed = o.orient(k_facets(VertexKind::Plain, a))?;
            for kind in [VertexKind::TypeI, VertexKind::TypeII] {
                let retyped = signed.iter().map(|(f, s)| (f.retype(kind), *s)).collect();
                o.facets.insert((kind, a), retyped);
            }
            o.facets.insert((VertexKind::Plain, a), signed);
        }
        for a in 1..=max_arity {
            let signed = o.orient(j_facets(a))?;
            o.facets.insert((VertexKind::TypeIII, a), signed);
        }
        Ok(o)
    }

    /// Signs making the facets' boundaries cancel along every ridge.
    fn orient(&self, facets: Vec<Sh>) -> Result<Vec<(Sh, i64)>> {
        let mut facets: Vec<(String, Sh)> = facets
            .into_iter()
            .map(|f| (Tree::from_root(f.to_node()).encode(), f))
            .collect();
        facets.sort_by(|a, b| a.0.cmp(&b.0));
        let dim = match facets.first() {
            None => return Ok(Vec::new()),
            Some((_, f)) => cell_dim(&Tree::from_root(f.to_node())),
        };
        if dim == 0 {
            if facets.len() != 2 {
                return Err(Error::Inconsistent(format!(
                    "a segment needs two endpoints, found {}",
                    facets.len()
                )));
            }
            let mut it = facets.into_iter();
            return Ok(vec![(it.next().unwrap().1, 1), (it.next().unwrap().1, -1)]);
        }

        let mut ridges: BTreeMap<String, Vec<(usize, i64)>> = BTreeMap::new();
        for (i, (_, f)) in facets.iter().enumerate() {
            for (ridge, c) in self.faces(&Tree::from_root(f.to_node()))? {
                ridges.entry(ridge.encode()).or_default().push((i, c));
            }
        }
        let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); facets.len()];
        for (ridge, inc) in &ridges {
            let [(i, ci), (j, cj)] = inc[..] else {
                return Err(Error::Inconsistent(format!(
                    "ridge {ridge} lies in {} facets",
                    inc.len()
                )));
            };
            // σ_i c_i + σ_j c_j = 0
            adj[i].push((j, -ci * cj));
            adj[j].push((i, -ci * cj));
        }
        let mut sign = vec![0i64; facets.len()];
        sign[0] = 1;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for &(j, rel) in &adj[i] {
                let want = sign[i] * rel;
                if sign[j] == 0 {
                    sign[j] = want;
                    queue.push_back(j);
                } else if sign[j] != want {
                    return Err(Error::Inconsistent(
                        "facet signs cannot be made to cancel".into(),
                    ));
                }
            }
        }
        if sign.contains(&0) {
            return Err(Error::Inconsistent(
                "facet ridge graph is disconnected".into(),
            ));
        }
        Ok(facets.into_iter().map(|(_, f)| f).zip(sign).collect())
    }

    /// Signed codimension-one faces of a cell.
    pub(crate) fn faces(&self, tree: &Tree) -> Result<Vec<(Tree, i64)>> {
        let sh = Sh::from_node(tree.root(), &mut 0);
        let mut verts = Vec::new();
        sh.vertices(&mut verts);
        let dims: Vec<usize> = verts.iter().map(|&(k, a)| vertex_dim(k, a)).collect();

        let mut out: BTreeMap<String, (Tree, i64)> = BTreeMap::new();
        let mut before = 0usize;
        for (i, &(kind, arity)) in verts.iter().enumerate() {
            let signed = self.facets.get(&(kind, arity)).ok_or_else(|| {
                Error::Domain(format!("no orientation data for {kind:?} arity {arity}"))
            })?;
            for (facet, sigma) in signed {
                let mut fverts = Vec::new();
                facet.vertices(&mut fverts);
                let width = fverts.len();
                let face = sh.substitute(i, facet, width);

                let mut induced = dims[..i].to_vec();
                induced.extend(fverts.iter().map(|&(k, a)| vertex_dim(k, a)));
                induced.extend_from_slice(&dims[i + 1..]);
                let mut order = Vec::new();
                face.tags(&mut order);

                let prefix = if before.is_multiple_of(2) { 1 } else { -1 };
                let coeff = prefix * sigma * koszul(&order, &induced);
                let t = Tree::from_root(face.to_node());
                let e = out.entry(t.encode()).or_insert((t, 0));
                e.1 += coeff;
            }
            before += dims[i];
        }
        Ok(out.into_values().filter(|(_, c)| *c != 0).collect())
    }
}
