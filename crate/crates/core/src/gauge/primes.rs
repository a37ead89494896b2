//! Prime sets, prime counting and p-adic valuations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// Primes `<= m`, by the sieve of Eratosthenes.
pub fn primes_up_to(m: u64) -> Vec<u64> {
    if m < 2 {
        return Vec::new();
    }
    let m = m as usize;
    let mut composite = vec![false; m + 1];
    let mut out = Vec::new();
    for i in 2..=m {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= m {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// π(m): the number of primes `<= m`.
pub fn prime_pi(m: u64) -> usize {
    primes_up_to(m).len()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Prime factorization by trial division, ascending.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// `2^3·3^3·5·7`.
pub fn format_factorization(f: &[(BigInt, u32)]) -> String {
    if f.is_empty() {
        return "1".into();
    }
    f.iter()
        .map(|(p, e)| {
            if *e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("·")
}

/// The set P of primes at which Z is localized. `Empty` localizes at no
/// prime (rationalization); `All` keeps Z itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PrimeSet {
    Empty,
    Finite(Vec<u64>),
    All,
}

impl PrimeSet {
    pub fn finite(primes: impl IntoIterator<Item = u64>) -> Result<PrimeSet> {
        let mut ps: Vec<u64> = primes.into_iter().collect();
        if let Some(bad) = ps.iter().find(|&&p| !is_prime(p)) {
            return domain(format!("{bad} is not prime"));
        }
        ps.sort_unstable();
        ps.dedup();
        Ok(if ps.is_empty() {
            PrimeSet::Empty
        } else {
            PrimeSet::Finite(ps)
        })
    }

    pub fn single(p: u64) -> Result<PrimeSet> {
        PrimeSet::finite([p])
    }

    /// Smallest member; 2 for `All`.
    pub fn min(&self) -> Option<u64> {
        match self {
            PrimeSet::Empty => None,
            PrimeSet::Finite(ps) => ps.first().copied(),
            PrimeSet::All => Some(2),
        }
    }

    pub fn is_singleton(&self) -> bool {
        matches!(self, PrimeSet::Finite(ps) if ps.len() == 1)
    }

    /// Does `d` avoid every prime of the set?
    pub fn coprime(&self, d: &BigInt) -> bool {
        match self {
            PrimeSet::Empty => true,
            PrimeSet::All => d.abs().is_one(),
            PrimeSet::Finite(ps) => ps.iter().all(|&p| !(d % BigInt::from(p)).is_zero()),
        }
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSet::Empty => f.write_str("{}"),
            PrimeSet::All => f.write_str("all"),
            PrimeSet::Finite(ps) => {
                let s: Vec<String> = ps.iter().map(u64::to_string).collect();
                write!(f, "{{{}}}", s.join(","))
            }
        }
    }
}

impl std::str::FromStr for PrimeSet {
    type Err = Error;

    /// `"2,3,5"`, `"all"`, or `"none"` / `""` for the empty set.
    fn from_str(s: &str) -> Result<PrimeSet> {
        let s = s.trim();
        match s {
            "all" => return Ok(PrimeSet::All),
            "" | "none" => return Ok(PrimeSet::Empty),
            _ => {}
        }
        let ps = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Domain(format!("bad prime {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PrimeSet::finite(ps)
    }
}

/// p-adic valuation with v_p(0) = ∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_u32(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

pub fn valuation(k: &BigInt, p: u64) -> Valuation {
    if k.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p);
    let mut k = k.abs();
    let mut v = 0;
    loop {
        let (q, r) = k.div_rem(&p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        k = q;
        v += 1;
    }
}
