//! p-local triviality decisions for the gauge-group fibrewise structures.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::epsilon::epsilon_sequence;
use super::primes::{is_prime, valuation, PrimeSet, Valuation};
use crate::error::{domain, Result};
use crate::rational::{factorial, Rational};

/// Membership in the localization Z_P.
pub fn in_local_ring(q: &Rational, primes: &PrimeSet) -> bool {
    primes.coprime(q.denom())
}

/// Outcome of checking the three congruences satisfied by the ε-sequence
/// at an odd prime `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub p: u64,
    /// ε_1..ε_{(p−3)/2} all lie in Z_(p).
    pub leading_terms_local: bool,
    /// ε_{(p−1)/2} ≡ 1/p! modulo Z_(p).
    pub middle_term: bool,
    /// p·ε_{p−1} ≡ −1/((p+1)!(p−2)!) modulo Z_(p).
    pub top_term: bool,
}

impl CongruenceReport {
    pub fn holds(&self) -> bool {
        self.leading_terms_local && self.middle_term && self.top_term
    }
}

impl fmt::Display for CongruenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "ok" } else { "FAIL" };
        write!(
            f,
            "p={} leading={} middle={} top={}",
            self.p,
            mark(self.leading_terms_local),
            mark(self.middle_term),
            mark(self.top_term)
        )
    }
}

pub const MAX_CONGRUENCE_PRIME: u64 = 13;

pub fn epsilon_congruence(p: u64) -> Result<CongruenceReport> {
    if p == 2 || !is_prime(p) {
        return domain(format!("{p} is not an odd prime"));
    }
    if p > MAX_CONGRUENCE_PRIME {
        return domain(format!(
            "p = {p} exceeds the supported bound {MAX_CONGRUENCE_PRIME}"
        ));
    }
    let local = PrimeSet::single(p)?;
    let eps = epsilon_sequence((p - 1) as usize)?;
    let half = ((p - 1) / 2) as usize;
    let inv = |n: BigInt| Rational::new(1.into(), n);

    let leading_terms_local = eps[..half - 1].iter().all(|e| in_local_ring(e, &local));
    let middle_term = in_local_ring(&(&eps[half - 1] - inv(factorial(p))), &local);
    let top = Rational::from_integer(p.into()) * &eps[(p - 2) as usize]
        + inv(factorial(p + 1) * factorial(p - 2));
    Ok(CongruenceReport {
        p,
        leading_terms_local,
        middle_term,
        top_term: in_local_ring(&top, &local),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Trivial,
    NotTrivial,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Trivial => "trivial",
            Verdict::NotTrivial => "not-trivial",
            Verdict::Unknown => "unknown",
        })
    }
}

/// Which row of the decision table fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// n below (p−1)/2: always trivial.
    BelowHalf,
    /// n = (p−1)/2: trivial iff p | k.
    Half,
    /// single prime, (p−1)/2 < n ≤ p−2: trivial iff p | k.
    Extension,
    /// single prime, n = p−1: trivial iff p² | k.
    Top,
    /// necessary condition k·ε_i ∈ Z_P.
    Necessary,
}

impl Clause {
    pub fn tag(self) -> &'static str {
        match self {
            Clause::BelowHalf => "(a)",
            Clause::Half => "(b)",
            Clause::Extension => "(c)",
            Clause::Top => "(d)",
            Clause::Necessary => "(e)",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Clause {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TrivialityVerdict {
    pub verdict: Verdict,
    pub clause: Clause,
}

impl fmt::Display for TrivialityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.verdict, self.clause)
    }
}

/// Is aut P_k, localized at `primes`, trivial as a fibrewise A_n-space?
pub fn decide_triviality(k: &BigInt, primes: &PrimeSet, n: usize) -> Result<TrivialityVerdict> {
    if n < 1 {
        return domain("n must be at least 1");
    }
    let Some(p) = primes.min() else {
        return domain("the prime set must be nonempty");
    };
    let divides = |d: u64| (k % BigInt::from(d)).is_zero();
    let iff = |cond: bool, clause| TrivialityVerdict {
        verdict: if cond {
            Verdict::Trivial
        } else {
            Verdict::NotTrivial
        },
        clause,
    };
    let half = ((p.saturating_sub(1)) / 2) as usize;
    let pu = p as usize;

    if p >= 3 {
        if n < half {
            return Ok(iff(true, Clause::BelowHalf));
        }
        if n == half {
            return Ok(iff(divides(p), Clause::Half));
        }
        if primes.is_singleton() {
            if n <= pu - 2 {
                return Ok(iff(divides(p), Clause::Extension));
            }
            if n == pu - 1 {
                return Ok(iff(divides(p * p), Clause::Top));
            }
        }
    }

    let kq = Rational::from_integer(k.clone());
    let fails = epsilon_sequence(n)?
        .iter()
        .any(|e| !in_local_ring(&(&kq * e), primes));
    Ok(TrivialityVerdict {
        verdict: if fails {
            Verdict::NotTrivial
        } else {
            Verdict::Unknown
        },
        clause: Clause::Necessary,
    })
}

/// (v_p(k))_{p∈P}. Equal vectors give A_∞-equivalent P-local gauge groups.
pub fn local_unit_class(k: &BigInt, primes: &PrimeSet) -> Result<Vec<(u64, Valuation)>> {
    match primes {
        PrimeSet::Finite(ps) => Ok(ps.iter().map(|&p| (p, valuation(k, p))).collect()),
        _ => domain("the unit class needs a finite nonempty prime set"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn decide(k: i64, ps: &str, n: usize) -> TrivialityVerdict {
        decide_triviality(&BigInt::from(k), &ps.parse().unwrap(), n).unwrap()
    }

    #[test]
    fn local_membership() {
        assert!(in_local_ring(&frac(1, 6), &"5".parse().unwrap()));
        assert!(!in_local_ring(&frac(1, 6), &"2,3".parse().unwrap()));
        assert!(in_local_ring(&frac(1, 6), &PrimeSet::Empty));
        assert!(!in_local_ring(&frac(1, 6), &PrimeSet::All));
    }

    #[test]
    fn congruences() {
        for p in [3, 5, 7, 11, 13] {
            let r = epsilon_congruence(p).unwrap();
            assert!(r.holds(), "{r}");
        }
        assert!(epsilon_congruence(2).is_err());
        assert!(epsilon_congruence(9).is_err());
        assert!(epsilon_congruence(17).is_err());
    }

    #[test]
    fn p_eps_top_is_not_local() {
        let eps = epsilon_sequence(10).unwrap();
        for p in [3u64, 5, 7, 11] {
            let q = Rational::from_integer(p.into()) * &eps[(p - 2) as usize];
            assert!(!in_local_ring(&q, &PrimeSet::single(p).unwrap()));
        }
    }

    #[test]
    fn table_examples() {
        let v = |verdict, clause| TrivialityVerdict { verdict, clause };
        assert_eq!(decide(5, "5", 2), v(Verdict::Trivial, Clause::Half));
        assert_eq!(decide(3, "3", 2), v(Verdict::NotTrivial, Clause::Top));
        assert_eq!(decide(9, "3", 2), v(Verdict::Trivial, Clause::Top));
        assert_eq!(
            decide(1, "2,3", 1),
            v(Verdict::NotTrivial, Clause::Necessary)
        );
        // 7560·ε_4 = −23/30 is not {2,3,5,7}-local
        assert_eq!(
            decide(7560, "2,3,5,7", 4),
            v(Verdict::NotTrivial, Clause::Necessary)
        );
        assert_eq!(
            decide(226800, "2,3,5,7", 4),
            v(Verdict::Unknown, Clause::Necessary)
        );
        assert_eq!(decide(1, "7", 2), v(Verdict::Trivial, Clause::BelowHalf));
        assert_eq!(decide(7, "7", 5), v(Verdict::Trivial, Clause::Extension));
        assert_eq!(decide(8, "7", 5), v(Verdict::NotTrivial, Clause::Extension));
        assert_eq!(decide(1, "all", 1).clause, Clause::Necessary);
        assert!(decide_triviality(&BigInt::from(1), &PrimeSet::Empty, 1).is_err());
    }

    #[test]
    fn verdict_json() {
        let s = serde_json::to_string(&decide(5, "5", 2)).unwrap();
        assert_eq!(s, r#"{"verdict":"trivial","clause":"(b)"}"#);
    }

    #[test]
    fn unit_classes() {
        let c = local_unit_class(&BigInt::from(12), &"2,3".parse().unwrap()).unwrap();
        assert_eq!(
            c,
            vec![(2, Valuation::Finite(2)), (3, Valuation::Finite(1))]
        );
        let c = local_unit_class(&BigInt::from(0), &"3".parse().unwrap()).unwrap();
        assert_eq!(c, vec![(3, Valuation::Infinite)]);
        assert!(local_unit_class(&BigInt::from(1), &PrimeSet::All).is_err());
    }
}
