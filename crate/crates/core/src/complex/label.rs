//! Grafting terms naming cells, and the recursive generation of all cells
//! of K_n and J_n from the top cells of smaller complexes.
//!
//! Two terms name the same cell when they evaluate to the same tree shape.
//! Each cell keeps the least term reaching it (shorter first, then
//! lexicographic), built from the already canonical terms of its factors.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinat::{compositions, product};
use crate::error::Result;
use crate::operad::{graft_jk, graft_k, graft_kj};
use crate::tree::{Tree, VertexKind};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CellLabel {
    /// Interior of K_n.
    TopK(usize),
    /// Interior of J_n.
    TopJ(usize),
    /// ∂_k(r,t)[a, b].
    Partial {
        k: usize,
        outer: Box<CellLabel>,
        inner: Box<CellLabel>,
    },
    /// δ_k(r,t)[a, b] with `outer` painted.
    UnpaintedOntoPainted {
        k: usize,
        outer: Box<CellLabel>,
        inner: Box<CellLabel>,
    },
    /// δ(t; r_1..r_t)[base; factors].
    PaintedOntoUnpainted {
        base: Box<CellLabel>,
        factors: Vec<CellLabel>,
    },
}

impl CellLabel {
    pub fn leaves(&self) -> usize {
        match self {
            CellLabel::TopK(n) | CellLabel::TopJ(n) => *n,
            CellLabel::Partial { outer, inner, .. }
            | CellLabel::UnpaintedOntoPainted { outer, inner, .. } => {
                outer.leaves() + inner.leaves() - 1
            }
            CellLabel::PaintedOntoUnpainted { factors, .. } => {
                factors.iter().map(CellLabel::leaves).sum()
            }
        }
    }

    /// The tree shape this term denotes.
    pub fn evaluate(&self) -> Result<Tree> {
        Ok(match self {
            CellLabel::TopK(n) => Tree::corolla(VertexKind::Plain, *n),
            CellLabel::TopJ(n) => Tree::corolla(VertexKind::TypeIII, *n),
            CellLabel::Partial { k, outer, inner } => {
                graft_k(*k, &outer.evaluate()?, &inner.evaluate()?)?.shape()
            }
            CellLabel::UnpaintedOntoPainted { k, outer, inner } => {
                graft_jk(*k, &outer.evaluate()?, &inner.evaluate()?)?.shape()
            }
            CellLabel::PaintedOntoUnpainted { base, factors } => {
                let fs = factors
                    .iter()
                    .map(CellLabel::evaluate)
                    .collect::<Result<Vec<_>>>()?;
                graft_kj(&base.evaluate()?, &fs)?.shape()
            }
        })
    }
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellLabel::TopK(n) => write!(f, "K{n}"),
            CellLabel::TopJ(n) => write!(f, "J{n}"),
            CellLabel::Partial { k, outer, inner } => write!(
                f,
                "∂_{k}({},{})[{outer}, {inner}]",
                outer.leaves(),
                inner.leaves()
            ),
            CellLabel::UnpaintedOntoPainted { k, outer, inner } => write!(
                f,
                "δ_{k}({},{})[{outer}, {inner}]",
                outer.leaves(),
                inner.leaves()
            ),
            CellLabel::PaintedOntoUnpainted { base, factors } => {
                let rs: Vec<String> = factors.iter().map(|x| x.leaves().to_string()).collect();
                let fs: Vec<String> = factors.iter().map(ToString::to_string).collect();
                write!(
                    f,
                    "δ({};{})[{base}; {}]",
                    base.leaves(),
                    rs.join(","),
                    fs.join(", ")
                )
            }
        }
    }
}

/// A generated cell: its shape and least naming term.
#[derive(Debug, Clone)]
pub struct GeneratedCell {
    pub tree: Tree,
    pub term: CellLabel,
    term_key: (usize, String),
}

/// Cells keyed by tree encoding.
pub type CellTable = BTreeMap<String, GeneratedCell>;

fn offer(table: &mut CellTable, term: CellLabel) -> Result<()> {
    let tree = term.evaluate()?;
    let text = term.to_string();
    let key = (text.chars().count(), text);
    match table.get_mut(&tree.encode()) {
        Some(cell) if cell.term_key <= key => {}
        Some(cell) => {
            cell.term = term;
            cell.term_key = key;
        }
        None => {
            table.insert(
                tree.encode(),
                GeneratedCell {
                    tree,
                    term,
                    term_key: key,
                },
            );
        }
    }
    Ok(())
}

fn maybe_rev<T>(mut v: Vec<T>, reverse: bool) -> Vec<T> {
    if reverse {
        v.reverse();
    }
    v
}

/// Cell tables of K_2..K_n (index `m` holds K_m; lower slots empty).
pub fn generate_k(n: usize, reverse: bool) -> Result<Vec<CellTable>> {
    let mut ks: Vec<CellTable> = vec![CellTable::new(); n + 1];
    for m in 2..=n {
        let mut table = CellTable::new();
        offer(&mut table, CellLabel::TopK(m))?;
        let splits: Vec<(usize, usize, usize)> = (2..m)
            .flat_map(|r| (1..=r).map(move |k| (k, r, m - r + 1)))
            .collect();
        for (k, r, t) in maybe_rev(splits, reverse) {
            for a in maybe_rev(ks[r].values().collect(), reverse) {
                for b in maybe_rev(ks[t].values().collect(), reverse) {
                    offer(
                        &mut table,
                        CellLabel::Partial {
                            k,
                            outer: Box::new(a.term.clone()),
                            inner: Box::new(b.term.clone()),
                        },
                    )?;
                }
            }
        }
        ks[m] = table;
    }
    Ok(ks)
}

/// Cell tables of J_1..J_n, given K tables up to at least n.
pub fn generate_j(n: usize, ks: &[CellTable], reverse: bool) -> Result<Vec<CellTable>> {
    let mut js: Vec<CellTable> = vec![CellTable::new(); n + 1];
    for m in 1..=n {
        let mut table = CellTable::new();
        offer(&mut table, CellLabel::TopJ(m))?;

        let splits: Vec<(usize, usize, usize)> = (1..m)
            .flat_map(|r| (1..=r).map(move |k| (k, r, m - r + 1)))
            .collect();
        for (k, r, t) in maybe_rev(splits, reverse) {
            for a in maybe_rev(js[r].values().collect(), reverse) {
                for b in maybe_rev(ks[t].values().collect(), reverse) {
                    offer(
                        &mut table,
                        CellLabel::UnpaintedOntoPainted {
                            k,
                            outer: Box::new(a.term.clone()),
                            inner: Box::new(b.term.clone()),
                        },
                    )?;
                }
            }
        }

        let parts: Vec<Vec<usize>> = (2..=m).flat_map(|t| compositions(m, t)).collect();
        for rs in maybe_rev(parts, reverse) {
            let lists: Vec<Vec<CellLabel>> = rs
                .iter()
                .map(|&r| maybe_rev(js[r].values().map(|c| c.term.clone()).collect(), reverse))
                .collect();
            for base in maybe_rev(ks[rs.len()].values().collect(), reverse) {
                for factors in product(&lists) {
                    offer(
                        &mut table,
                        CellLabel::PaintedOntoUnpainted {
                            base: Box::new(base.term.clone()),
                            factors,
                        },
                    )?;
                }
            }
        }
        js[m] = table;
    }
    Ok(js)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_counts() {
        let ks = generate_k(7, false).unwrap();
        let counts: Vec<usize> = ks[2..].iter().map(CellTable::len).collect();
        assert_eq!(counts, [1, 3, 11, 45, 197, 903]);
        let js = generate_j(4, &ks, false).unwrap();
        let counts: Vec<usize> = js[1..].iter().map(CellTable::len).collect();
        assert_eq!(counts, [1, 3, 13, 67]);
    }

    #[test]
    fn terms_render() {
        let ks = generate_k(3, false).unwrap();
        let js = generate_j(2, &ks, false).unwrap();
        let terms: Vec<String> = js[2].values().map(|c| c.term.to_string()).collect();
        assert!(terms.contains(&"J2".to_string()));
        assert!(terms.contains(&"δ_1(1,2)[J1, K2]".to_string()));
        assert!(terms.contains(&"δ(2;1,1)[K2; J1, J1]".to_string()));
    }
}
