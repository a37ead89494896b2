//! Exhaustive check of the six compatibility relations between grafting
//! maps, on sampled points of K_m and J_m.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{domain, Result};
use crate::par::{self, Exec};
use crate::rational::{self, Rational};
use crate::tree::{binary_painted_shapes, binary_unpainted, equal_as_points, metric_points, Tree};

use super::graft::{graft_jk, graft_k, graft_kj};
use super::level::LevelTester;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    /// ∂_j(p,r+t−1)(1×∂_k(r,t)) = ∂_{j+k−1}(p+r−1,t)(∂_j(p,r)×1)
    PartialNested,
    /// ∂_{j+r−1}(p+r−1,t)(∂_k(p,r)×1) = ∂_k(p+t−1,r)(∂_j(p,t)×1)(1×T), k < j
    PartialDisjoint,
    /// δ_j(p,r+t−1)(1×∂_k(r,t)) = δ_{j+k−1}(p+r−1,t)(δ_j(p,r)×1)
    MixedNested,
    /// δ_{j+r−1}(p+r−1,t)(δ_k(p,r)×1) = δ_k(p+t−1,r)(δ_j(p,t)×1)(1×T), k < j
    MixedDisjoint,
    /// δ_{p_1+..+p_{j−1}+k}(p,r)(δ(t,p_1..p_t)×1) = δ(t,..,p_j+r−1,..)(1×..×δ_k(p_j,r)×..)T_j
    PaintedThenUnpainted,
    /// δ(r+t−1,p_1..)(∂_k(r,t)×1) = δ(r,..,p_k+..+p_{k+t−1},..)(1×..×δ(t,p_k..)×..)T'_k
    PartialThenPainted,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::PartialNested,
        Relation::PartialDisjoint,
        Relation::MixedNested,
        Relation::MixedDisjoint,
        Relation::PaintedThenUnpainted,
        Relation::PartialThenPainted,
    ];
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::PartialNested => "partial-nested",
            Relation::PartialDisjoint => "partial-disjoint",
            Relation::MixedNested => "mixed-nested",
            Relation::MixedDisjoint => "mixed-disjoint",
            Relation::PaintedThenUnpainted => "painted-then-unpainted",
            Relation::PartialThenPainted => "partial-then-painted",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationFailure {
    pub relation: Relation,
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelationReport {
    /// Operand tuples compared, per relation.
    pub checked: BTreeMap<Relation, usize>,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_checked(&self) -> usize {
        self.checked.values().sum()
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rel in Relation::ALL {
            let n = self.checked.get(&rel).copied().unwrap_or(0);
            let bad = self.failures.iter().filter(|x| x.relation == rel).count();
            writeln!(f, "{rel} checked {n} failures {bad}")?;
        }
        for x in &self.failures {
            writeln!(
                f,
                "FAIL {} {}: {} != {}",
                x.relation, x.instance, x.lhs, x.rhs
            )?;
        }
        Ok(())
    }
}

/// Sampled points of K_m: binary unpainted shapes with every assignment of
/// sample lengths.
pub fn k_points(m: usize, samples: &[Rational]) -> Result<Vec<Tree>> {
    Ok(binary_unpainted(m)?
        .iter()
        .flat_map(|s| metric_points(s, samples))
        .collect())
}

/// Sampled points of J_m: binary painted shapes with every assignment of
/// sample lengths, keeping only level-trees.
pub fn j_points(m: usize, samples: &[Rational], exec: Exec) -> Result<Vec<Tree>> {
    let shapes = binary_painted_shapes(m)?;
    Ok(par::flat_map(exec, &shapes, |s| {
        let mut tester = LevelTester::new();
        metric_points(s, samples)
            .into_iter()
            .filter(|t| tester.is_level(t))
            .collect()
    }))
}

/// One parameterised family of instances; operands are drawn from the
/// sampled point sets.
#[derive(Debug, Clone)]
enum Params {
    PartialNested {
        p: usize,
        r: usize,
        t: usize,
        j: usize,
        k: usize,
    },
    PartialDisjoint {
        p: usize,
        r: usize,
        t: usize,
        j: usize,
        k: usize,
    },
    MixedNested {
        p: usize,
        r: usize,
        t: usize,
        j: usize,
        k: usize,
    },
    MixedDisjoint {
        p: usize,
        r: usize,
        t: usize,
        j: usize,
        k: usize,
    },
    PaintedThenUnpainted {
        ps: Vec<usize>,
        r: usize,
        j: usize,
        k: usize,
    },
    PartialThenPainted {
        r: usize,
        t: usize,
        k: usize,
        ps: Vec<usize>,
    },
}

impl Params {
    fn relation(&self) -> Relation {
        match self {
            Params::PartialNested { .. } => Relation::PartialNested,
            Params::PartialDisjoint { .. } => Relation::PartialDisjoint,
            Params::MixedNested { .. } => Relation::MixedNested,
            Params::MixedDisjoint { .. } => Relation::MixedDisjoint,
            Params::PaintedThenUnpainted { .. } => Relation::PaintedThenUnpainted,
            Params::PartialThenPainted { .. } => Relation::PartialThenPainted,
        }
    }
}

fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=n.saturating_sub(parts - 1) {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn all_params(max: usize) -> Vec<Params> {
    let mut out = Vec::new();
    // ∂/∂ and δ/∂ families: operands of p, r, t leaves; result p+r+t−2
    for p in 1..=max {
        for r in 2..=max {
            for t in 2..=max {
                if p + r + t - 2 > max {
                    continue;
                }
                for j in 1..=p {
                    for k in 1..=r {
                        if p >= 2 {
                            out.push(Params::PartialNested { p, r, t, j, k });
                        }
                        out.push(Params::MixedNested { p, r, t, j, k });
                    }
                    for k in 1..j {
                        if p >= 2 {
                            out.push(Params::PartialDisjoint { p, r, t, j, k });
                        }
                        out.push(Params::MixedDisjoint { p, r, t, j, k });
                    }
                }
            }
        }
    }
    // δ(t; p_1..p_t) followed by δ_k: Σp + r − 1 leaves
    for t in 2..=max {
        for r in 2..=max {
            for total in t..=max {
                if total + r - 1 > max {
                    continue;
                }
                for ps in compositions(total, t) {
                    for j in 1..=t {
                        for k in 1..=ps[j - 1] {
                            out.push(Params::PaintedThenUnpainted {
                                ps: ps.clone(),
                                r,
                                j,
                                k,
                            });
                        }
                    }
                }
            }
        }
    }
    // ∂_k(r,t) followed by δ: Σp leaves over r+t−1 parts
    for r in 2..=max {
        for t in 2..=max {
            let parts = r + t - 1;
            for total in parts..=max {
                for ps in compositions(total, parts) {
                    for k in 1..=r {
                        out.push(Params::PartialThenPainted {
                            r,
                            t,
                            k,
                            ps: ps.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

struct Points {
    k: Vec<Vec<Tree>>,
    j: Vec<Vec<Tree>>,
}

impl Points {
    fn k(&self, m: usize) -> &[Tree] {
        &self.k[m]
    }

    fn j(&self, m: usize) -> &[Tree] {
        &self.j[m]
    }
}

/// Every operand tuple drawn one from each list.
fn tuples<'a>(lists: &[&'a [Tree]]) -> Vec<Vec<&'a Tree>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect()
    })
}

type Sides = Result<(Tree, Tree)>;

fn sides(params: &Params, ops: &[&Tree]) -> Sides {
    Ok(match params {
        Params::PartialNested { j, k, .. } => {
            let (rho, sigma, tau) = (ops[0], ops[1], ops[2]);
            let lhs = graft_k(*j, rho, &graft_k(*k, sigma, tau)?)?;
            let rhs = graft_k(j + k - 1, &graft_k(*j, rho, sigma)?, tau)?;
            (lhs, rhs)
        }
        Params::PartialDisjoint { r, j, k, .. } => {
            let (rho, sigma, tau) = (ops[0], ops[1], ops[2]);
            let lhs = graft_k(j + r - 1, &graft_k(*k, rho, sigma)?, tau)?;
            let rhs = graft_k(*k, &graft_k(*j, rho, tau)?, sigma)?;
            (lhs, rhs)
        }
        Params::MixedNested { j, k, .. } => {
            let (rho, sigma, tau) = (ops[0], ops[1], ops[2]);
            let lhs = graft_jk(*j, rho, &graft_k(*k, sigma, tau)?)?;
            let rhs = graft_jk(j + k - 1, &graft_jk(*j, rho, sigma)?, tau)?;
            (lhs, rhs)
        }
        Params::MixedDisjoint { r, j, k, .. } => {
            let (rho, sigma, tau) = (ops[0], ops[1], ops[2]);
            let lhs = graft_jk(j + r - 1, &graft_jk(*k, rho, sigma)?, tau)?;
            let rhs = graft_jk(*k, &graft_jk(*j, rho, tau)?, sigma)?;
            (lhs, rhs)
        }
        Params::PaintedThenUnpainted { ps, j, k, .. } => {
            let t = ps.len();
            let tau = ops[0];
            let pis: Vec<Tree> = ops[1..=t].iter().map(|x| (*x).clone()).collect();
            let sigma = ops[t + 1];
            let offset: usize = ps[..j - 1].iter().sum();
            let lhs = graft_jk(offset + k, &graft_kj(tau, &pis)?, sigma)?;
            let mut replaced = pis;
            replaced[j - 1] = graft_jk(*k, &replaced[j - 1], sigma)?;
            let rhs = graft_kj(tau, &replaced)?;
            (lhs, rhs)
        }
        Params::PartialThenPainted { r, t, k, ps } => {
            let (rho, tau) = (ops[0], ops[1]);
            let pis: Vec<Tree> = ops[2..].iter().map(|x| (*x).clone()).collect();
            debug_assert_eq!(pis.len(), r + t - 1);
            let lhs = graft_kj(&graft_k(*k, rho, tau)?, &pis)?;
            let inner = graft_kj(tau, &pis[k - 1..k - 1 + t])?;
            let mut outer: Vec<Tree> = pis[..k - 1].to_vec();
            outer.push(inner);
            outer.extend(pis[k - 1 + t..].iter().cloned());
            debug_assert_eq!(outer.len(), *r);
            debug_assert_eq!(ps.len(), pis.len());
            let rhs = graft_kj(rho, &outer)?;
            (lhs, rhs)
        }
    })
}

fn operand_lists<'a>(params: &Params, pts: &'a Points) -> Vec<&'a [Tree]> {
    match params {
        Params::PartialNested { p, r, t, .. } | Params::PartialDisjoint { p, r, t, .. } => {
            vec![pts.k(*p), pts.k(*r), pts.k(*t)]
        }
        Params::MixedNested { p, r, t, .. } | Params::MixedDisjoint { p, r, t, .. } => {
            vec![pts.j(*p), pts.k(*r), pts.k(*t)]
        }
        Params::PaintedThenUnpainted { ps, r, .. } => {
            let mut v = vec![pts.k(ps.len())];
            v.extend(ps.iter().map(|&p| pts.j(p)));
            v.push(pts.k(*r));
            v
        }
        Params::PartialThenPainted { r, t, ps, .. } => {
            let mut v = vec![pts.k(*r), pts.k(*t)];
            v.extend(ps.iter().map(|&p| pts.j(p)));
            v
        }
    }
}

fn check_family(params: &Params, pts: &Points) -> (Relation, usize, Vec<RelationFailure>) {
    let rel = params.relation();
    let mut failures = Vec::new();
    let lists = operand_lists(params, pts);
    let all = tuples(&lists);
    for ops in &all {
        let verdict = sides(params, ops).and_then(|(l, r)| {
            let same = equal_as_points(&l, &r)?;
            Ok((l, r, same))
        });
        let instance = || {
            let names: Vec<String> = ops.iter().map(|t| t.encode()).collect();
            format!("{params:?} on [{}]", names.join(", "))
        };
        match verdict {
            Ok((_, _, true)) => {}
            Ok((l, r, false)) => failures.push(RelationFailure {
                relation: rel,
                instance: instance(),
                lhs: l.encode(),
                rhs: r.encode(),
            }),
            Err(e) => failures.push(RelationFailure {
                relation: rel,
                instance: instance(),
                lhs: e.to_string(),
                rhs: String::new(),
            }),
        }
    }
    (rel, all.len(), failures)
}

/// Compare both sides of every relation instance whose result has at most
/// `max_leaves` leaves, over all sampled operand points.
pub fn verify_graft_relations(
    max_leaves: usize,
    samples: &[Rational],
    exec: Exec,
) -> Result<RelationReport> {
    if max_leaves < 4 {
        return domain(format!("max leaves must be at least 4, got {max_leaves}"));
    }
    if samples.is_empty() {
        return domain("at least one length sample is required");
    }
    if let Some(bad) = samples.iter().find(|s| !rational::in_unit_interval(s)) {
        return domain(format!("sample {} outside [0,1]", rational::format(bad)));
    }
    // unpainted operands have at most max − 1 leaves, painted ones max − 2
    let mut k = vec![Vec::new(); max_leaves];
    for (m, slot) in k.iter_mut().enumerate().skip(2) {
        *slot = k_points(m, samples)?;
    }
    let mut j = vec![Vec::new(); max_leaves - 1];
    for (m, slot) in j.iter_mut().enumerate().skip(1) {
        *slot = j_points(m, samples, exec)?;
    }
    let pts = Points { k, j };
    let params = all_params(max_leaves);
    let results = par::map(exec, &params, |p| check_family(p, &pts));
    let mut report = RelationReport::default();
    for rel in Relation::ALL {
        report.checked.insert(rel, 0);
    }
    for (rel, n, fails) in results {
        *report.checked.entry(rel).or_default() += n;
        report.failures.extend(fails);
    }
    Ok(report)
}
