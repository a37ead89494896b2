//! Lower bounds on the number of A_n-types of gauge groups of principal
//! SU(2)-bundles over S^4.

use num_bigint::BigUint;

use super::primes::prime_pi;
use crate::error::{domain, Result};

/// `2^{π(2n+1)}`, or with `sharper`, `2^{π(2n+1)−π(n+1)}·3^{π(n+1)}`.
pub fn lower_bound_types(n: u64, sharper: bool) -> Result<BigUint> {
    if n < 1 {
        return domain("n must be at least 1");
    }
    let all = prime_pi(2 * n + 1) as u32;
    let small = if sharper { prime_pi(n + 1) as u32 } else { 0 };
    Ok(BigUint::from(2u32).pow(all - small) * BigUint::from(3u32).pow(small))
}
