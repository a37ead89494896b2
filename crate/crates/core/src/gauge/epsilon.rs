//! The ε-sequence: rationals with
//!
//! ```text
//! 1/(2l+1)! = Σ_{i=1}^{l} Σ_{j_1+..+j_i = l, j_r >= 1} 2^i ε_i / ((2j_1)!..(2j_i)!)
//! ```
//!
//! for every l >= 1. The i = l term is exactly ε_l, so the sequence is
//! solved forward.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::combinat::compositions;
use crate::error::{domain, Result};
use crate::rational::{factorial, Rational};

/// Σ over compositions of `l` into `i` parts of 2^i / Π (2j_r)!.
fn composition_weight(l: usize, i: usize) -> Rational {
    let two_i = Rational::from_integer(BigInt::one() << i);
    compositions(l, i)
        .into_iter()
        .map(|c| {
            let den: BigInt = c.iter().map(|&j| factorial(2 * j as u64)).product();
            &two_i / Rational::from_integer(den)
        })
        .sum()
}

/// ε_1 .. ε_n.
pub fn epsilon_sequence(n: usize) -> Result<Vec<Rational>> {
    if n < 1 {
        return domain("the ε-sequence starts at n = 1");
    }
    let mut eps: Vec<Rational> = Vec::with_capacity(n);
    for l in 1..=n {
        let mut e = Rational::new(BigInt::one(), factorial(2 * l as u64 + 1));
        for (i, ei) in eps.iter().enumerate() {
            e -= ei * composition_weight(l, i + 1);
        }
        eps.push(e);
    }
    Ok(eps)
}

/// Right-hand side of the defining identity at `l`, evaluated on `eps`.
/// Equals 1/(2l+1)! exactly when `eps` is the ε-sequence.
pub fn defining_sum(eps: &[Rational], l: usize) -> Rational {
    eps.iter()
        .take(l)
        .enumerate()
        .map(|(i, e)| e * composition_weight(l, i + 1))
        .sum()
}

/// Least D > 0 with D·ε_i integral for all i <= n: the lcm of the
/// denominators. If aut P_k is trivial as a fibrewise A_n-space, D | k.
pub fn triviality_divisor(n: usize) -> Result<BigInt> {
    Ok(epsilon_sequence(n)?
        .iter()
        .fold(BigInt::one(), |acc, e| acc.lcm(e.denom())))
}
