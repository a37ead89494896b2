//! Exact rank of sparse integer matrices by fraction-free elimination.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

type SparseVec = BTreeMap<usize, BigInt>;

fn normalize(v: &mut SparseVec) {
    let g = v.values().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g > BigInt::from(1) {
        for x in v.values_mut() {
            *x /= &g;
        }
    }
}

/// Rank over Q of the matrix whose columns are given as sparse
/// `(row, coefficient)` lists.
pub fn rank(columns: &[Vec<(usize, i64)>]) -> usize {
    // pivot row -> reduced column with that leading row
    let mut pivots: HashMap<usize, SparseVec> = HashMap::new();
    for col in columns {
        let mut v: SparseVec = col
            .iter()
            .filter(|(_, c)| *c != 0)
            .map(|&(r, c)| (r, BigInt::from(c)))
            .collect();
        while let Some((&lead, a)) = v.iter().next() {
            let Some(p) = pivots.get(&lead) else {
                break;
            };
            let a = a.clone();
            let b = p[&lead].clone();
            // v <- b·v − a·p, cancelling the leading entry
            for x in v.values_mut() {
                *x *= &b;
            }
            for (r, y) in p {
                let e = v.entry(*r).or_insert_with(BigInt::zero);
                *e -= &a * y;
            }
            v.retain(|_, x| !x.is_zero());
            normalize(&mut v);
        }
        if let Some((&lead, a)) = v.iter().next() {
            if a.is_negative() {
                for x in v.values_mut() {
                    *x = -&*x;
                }
            }
            pivots.insert(lead, v);
        }
    }
    pivots.len()
}
