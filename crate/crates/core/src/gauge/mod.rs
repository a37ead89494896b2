//! Exact arithmetic around the gauge groups of SU(2)-bundles over S^4:
//! the ε-sequence, its Chern character derivation, p-local decisions and
//! counting bounds.

mod bounds;
mod decide;
mod epsilon;
mod primes;
mod series;

pub use bounds::lower_bound_types;
pub use decide::{
    decide_triviality, epsilon_congruence, in_local_ring, local_unit_class, Clause,
    CongruenceReport, TrivialityVerdict, Verdict, MAX_CONGRUENCE_PRIME,
};
pub use epsilon::{defining_sum, epsilon_sequence, triviality_divisor};
pub use primes::{
    factorize, format_factorization, is_prime, prime_pi, primes_up_to, valuation, PrimeSet,
    Valuation,
};
pub use series::{chern_of_generator, chern_oracle, KPoly, TruncatedSeries};
