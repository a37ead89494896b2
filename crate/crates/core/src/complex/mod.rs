//! Cellular models of K_n, J_n and their boundaries L_n, H_n.
//!
//! Cells are tree shapes: planar trees for K_n, painted trees for J_n. A
//! shape is the product of the polytopes of its vertices, and its dimension
//! is the sum of theirs. Boundary signs are described in [`orient`].

mod homology;
mod label;
mod orient;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::par::{self, Exec};
use crate::tree::Tree;

pub use homology::rank;
pub use label::{generate_j, generate_k, CellLabel, CellTable, GeneratedCell};

pub const MAX_K: usize = 8;
pub const MAX_J: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    K,
    L,
    J,
    H,
}

impl Family {
    /// The solid complex whose boundary this is, or itself.
    pub fn solid(self) -> Family {
        match self {
            Family::K | Family::L => Family::K,
            Family::J | Family::H => Family::J,
        }
    }

    pub fn is_boundary(self) -> bool {
        matches!(self, Family::L | Family::H)
    }

    /// Admissible `n`.
    pub fn range(self) -> (usize, usize) {
        match self {
            Family::K => (2, MAX_K),
            Family::L => (3, MAX_K),
            Family::J => (1, MAX_J),
            Family::H => (2, MAX_J),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::K => "K",
            Family::L => "L",
            Family::J => "J",
            Family::H => "H",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "K" => Ok(Family::K),
            "L" => Ok(Family::L),
            "J" => Ok(Family::J),
            "H" => Ok(Family::H),
            _ => domain(format!("unknown family {s:?}; expected K, L, J or H")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub dim: usize,
    /// Encoding of the tree shape.
    pub label: String,
}

/// Finite cell complex with integer incidences. Cells are sorted by
/// dimension and then label; ids are indices into that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    family: Family,
    n: usize,
    cells: Vec<Cell>,
    /// `boundary[i]` lists `(face id, coefficient)` sorted by id.
    boundary: Vec<Vec<(usize, i64)>>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BuildOptions {
    pub exec: Exec,
    /// Walk generators and factors in reverse order.
    pub reverse: bool,
}

pub fn build(family: Family, n: usize, opts: BuildOptions) -> Result<CellComplex> {
    let (lo, hi) = family.range();
    if n < lo || n > hi {
        return domain(format!(
            "{family}_{n} is outside the supported range {lo}..={hi}"
        ));
    }
    let ks = generate_k(n, opts.reverse)?;
    let table = match family.solid() {
        Family::K => &ks[n],
        _ => &generate_j(n, &ks, opts.reverse)?[n],
    };
    let orientation = orient::Orientation::new(n)?;

    let mut shapes: Vec<(usize, &Tree)> = table
        .values()
        .map(|c| (orient::cell_dim(&c.tree), &c.tree))
        .collect();
    shapes.sort_by_key(|a| (a.0, a.1.encode()));
    if family.is_boundary() {
        // the interior is the unique cell of top dimension
        shapes.pop();
    }
    let cells: Vec<Cell> = shapes
        .iter()
        .map(|(dim, t)| Cell {
            dim: *dim,
            label: t.encode(),
        })
        .collect();
    let ids: HashMap<&str, usize> = cells
        .iter()
        .enumerate()
        .map(|(i, c)| (c.label.as_str(), i))
        .collect();

    let faces = par::map(opts.exec, &shapes, |(_, t)| orientation.faces(t));
    let mut boundary = Vec::with_capacity(cells.len());
    for (i, fs) in faces.into_iter().enumerate() {
        let mut row = Vec::new();
        for (face, c) in fs? {
            let id = *ids.get(face.encode().as_str()).ok_or_else(|| {
                Error::Inconsistent(format!("face {face} of {} is not a cell", cells[i].label))
            })?;
            row.push((id, c));
        }
        row.sort_unstable();
        boundary.push(row);
    }
    let complex = CellComplex {
        family,
        n,
        cells,
        boundary,
    };
    complex.check_boundary_squared()?;
    Ok(complex)
}

pub fn build_k(n: usize) -> Result<CellComplex> {
    build(Family::K, n, BuildOptions::default())
}

pub fn build_j(n: usize) -> Result<CellComplex> {
    build(Family::J, n, BuildOptions::default())
}

impl CellComplex {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn boundary_of(&self, id: usize) -> &[(usize, i64)] {
        &self.boundary[id]
    }

    /// Largest cell dimension, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.cells.iter().map(|c| c.dim).max()
    }

    /// Cell counts by dimension, lowest first.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim().map_or(0, |d| d + 1)];
        for c in &self.cells {
            f[c.dim] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Checks ∂∘∂ = 0 over the integers.
    pub fn check_boundary_squared(&self) -> Result<()> {
        for (i, row) in self.boundary.iter().enumerate() {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(f, c) in row {
                for &(g, d) in &self.boundary[f] {
                    *acc.entry(g).or_default() += c * d;
                }
            }
            if let Some((g, v)) = acc.iter().find(|(_, v)| **v != 0) {
                return Err(Error::Inconsistent(format!(
                    "∂∂({}) has coefficient {v} on {}",
                    self.cells[i].label, self.cells[*g].label
                )));
            }
        }
        Ok(())
    }

    /// Rational Betti numbers b_0..b_dim.
    pub fn homology_ranks(&self, exec: Exec) -> Vec<usize> {
        let Some(top) = self.dim() else {
            return Vec::new();
        };
        // ranks[d] = rank of ∂_d : C_d -> C_{d-1}
        let dims: Vec<usize> = (0..=top + 1).collect();
        let ranks = par::map(exec, &dims, |&d| {
            let cols: Vec<Vec<(usize, i64)>> = self
                .cells
                .iter()
                .zip(&self.boundary)
                .filter(|(c, _)| c.dim == d && d > 0)
                .map(|(_, b)| b.clone())
                .collect();
            rank(&cols)
        });
        let f = self.f_vector();
        (0..=top).map(|d| f[d] - ranks[d] - ranks[d + 1]).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct CellJson {
    id: usize,
    dim: usize,
    label: String,
}

#[derive(Serialize, Deserialize)]
struct IncidenceJson {
    of: usize,
    cell: usize,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    family: String,
    n: usize,
    cells: Vec<CellJson>,
    boundary: Vec<IncidenceJson>,
}

pub fn export_complex(c: &CellComplex) -> serde_json::Value {
    let doc = ComplexJson {
        family: c.family.to_string(),
        n: c.n,
        cells: c
            .cells
            .iter()
            .enumerate()
            .map(|(id, cell)| CellJson {
                id,
                dim: cell.dim,
                label: cell.label.clone(),
            })
            .collect(),
        boundary: c
            .boundary
            .iter()
            .enumerate()
            .flat_map(|(of, row)| {
                row.iter()
                    .map(move |&(cell, coeff)| IncidenceJson { of, cell, coeff })
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("complex serializes")
}

pub fn import_complex(json: &str) -> Result<CellComplex> {
    let doc: ComplexJson =
        serde_json::from_str(json).map_err(|e| Error::Invalid(format!("complex JSON: {e}")))?;
    let family: Family = doc.family.parse()?;
    let mut cells = Vec::with_capacity(doc.cells.len());
    for (i, c) in doc.cells.into_iter().enumerate() {
        if c.id != i {
            return Err(Error::Invalid(format!(
                "cell ids must be 0..; found {} at {i}",
                c.id
            )));
        }
        cells.push(Cell {
            dim: c.dim,
            label: c.label,
        });
    }
    let mut boundary = vec![Vec::new(); cells.len()];
    for inc in doc.boundary {
        let (Some(of), Some(face)) = (cells.get(inc.of), cells.get(inc.cell)) else {
            return Err(Error::Invalid(format!(
                "incidence {}→{} names a missing cell",
                inc.of, inc.cell
            )));
        };
        if of.dim != face.dim + 1 {
            return Err(Error::Invalid(format!(
                "incidence {}→{} does not drop dimension by one",
                inc.of, inc.cell
            )));
        }
        boundary[inc.of].push((inc.cell, inc.coeff));
    }
    for row in &mut boundary {
        row.sort_unstable();
    }
    Ok(CellComplex {
        family,
        n: doc.n,
        cells,
        boundary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_f_vectors() {
        assert_eq!(build_k(2).unwrap().f_vector(), [1]);
        assert_eq!(build_k(3).unwrap().f_vector(), [2, 1]);
        assert_eq!(build_k(4).unwrap().f_vector(), [5, 5, 1]);
        assert_eq!(build_j(1).unwrap().f_vector(), [1]);
        assert_eq!(build_j(2).unwrap().f_vector(), [2, 1]);
        assert_eq!(build_j(3).unwrap().f_vector(), [6, 6, 1]);
    }

    #[test]
    fn circles() {
        let l4 = build(Family::L, 4, BuildOptions::default()).unwrap();
        assert_eq!(l4.homology_ranks(Exec::Sequential), [1, 1]);
        assert_eq!(l4.euler_characteristic(), 0);
        let h3 = build(Family::H, 3, BuildOptions::default()).unwrap();
        assert_eq!(h3.homology_ranks(Exec::Parallel), [1, 1]);
    }

    #[test]
    fn ranges() {
        assert!(build_k(1).is_err());
        assert!(build_k(9).is_err());
        assert!(build_j(7).is_err());
        assert!("X".parse::<Family>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let k4 = build_k(4).unwrap();
        let json = export_complex(&k4).to_string();
        assert_eq!(import_complex(&json).unwrap(), k4);
        let k2 = export_complex(&build_k(2).unwrap());
        assert_eq!(k2["cells"].as_array().unwrap().len(), 1);
        assert!(k2["boundary"].as_array().unwrap().is_empty());
        assert_eq!(k2["family"], "K");
    }
}
