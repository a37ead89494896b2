//! Truncated bivariate series in `s` and `b` with `s² = 0` and `b^{m+1} = 0`,
//! coefficients polynomial in a formal scalar `k`. Used to re-derive the
//! ε-sequence from the Chern character identity without the closed recursion.

use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::rational::{factorial, format, Rational};

/// Polynomial in `k` with rational coefficients; index is the degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct KPoly(Vec<Rational>);

impl KPoly {
    pub fn zero() -> KPoly {
        KPoly(Vec::new())
    }

    pub fn constant(c: Rational) -> KPoly {
        KPoly(vec![c]).trimmed()
    }

    /// `c·k`.
    pub fn linear(c: Rational) -> KPoly {
        KPoly(vec![Rational::zero(), c]).trimmed()
    }

    pub fn coeff(&self, deg: usize) -> Rational {
        self.0.get(deg).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> KPoly {
        KPoly(self.0.iter().map(|x| x * c).collect()).trimmed()
    }

    fn trimmed(mut self) -> KPoly {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }
}

impl Add for &KPoly {
    type Output = KPoly;
    fn add(self, rhs: &KPoly) -> KPoly {
        let n = self.0.len().max(rhs.0.len());
        KPoly((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect()).trimmed()
    }
}

impl Mul for &KPoly {
    type Output = KPoly;
    fn mul(self, rhs: &KPoly) -> KPoly {
        if self.is_zero() || rhs.is_zero() {
            return KPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        KPoly(out).trimmed()
    }
}

/// Element of `Q[k][s, b] / (s², b^{m+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    /// `terms[e][j]` is the coefficient of `s^e b^j`.
    terms: [Vec<KPoly>; 2],
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> TruncatedSeries {
        let row = vec![KPoly::zero(); order + 1];
        TruncatedSeries {
            order,
            terms: [row.clone(), row],
        }
    }

    pub fn one(order: usize) -> TruncatedSeries {
        TruncatedSeries::monomial(order, 0, 0, KPoly::constant(Rational::one()))
    }

    /// `c · s^e b^j`; monomials beyond the truncation vanish.
    pub fn monomial(order: usize, e: usize, j: usize, c: KPoly) -> TruncatedSeries {
        let mut t = TruncatedSeries::zero(order);
        if e <= 1 && j <= order {
            t.terms[e][j] = c;
        }
        t
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, e: usize, j: usize) -> &KPoly {
        &self.terms[e][j]
    }

    pub fn pow(&self, n: usize) -> TruncatedSeries {
        (0..n).fold(TruncatedSeries::one(self.order), |acc, _| &acc * self)
    }

    fn check_order(&self, other: &TruncatedSeries) {
        assert_eq!(self.order, other.order, "truncation orders differ");
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_order(rhs);
        let mut out = self.clone();
        for e in 0..2 {
            for j in 0..=self.order {
                out.terms[e][j] = &self.terms[e][j] + &rhs.terms[e][j];
            }
        }
        out
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_order(rhs);
        let m = self.order;
        let mut out = TruncatedSeries::zero(m);
        for e1 in 0..2 {
            for e2 in 0..(2 - e1) {
                for j1 in 0..=m {
                    if self.terms[e1][j1].is_zero() {
                        continue;
                    }
                    for j2 in 0..=(m - j1) {
                        let p = &self.terms[e1][j1] * &rhs.terms[e2][j2];
                        out.terms[e1 + e2][j1 + j2] = &out.terms[e1 + e2][j1 + j2] + &p;
                    }
                }
            }
        }
        out
    }
}

/// `ch a = Σ_{j≥1} 2 b^j / (2j)!`, truncated at `b^m`.
pub fn chern_of_generator(m: usize) -> TruncatedSeries {
    (1..=m).fold(TruncatedSeries::zero(m), |acc, j| {
        let c = Rational::new(2.into(), factorial(2 * j as u64));
        &acc + &TruncatedSeries::monomial(m, 0, j, KPoly::constant(c))
    })
}

/// Re-derives ε_1..ε_n by comparing `f*(ch a)` with `ch(f*a)` where
/// `f*b = ks + b` and `f*a = ku + a + Σ ε_i(k) u·a^i`.
///
/// The unknowns ε_i(k) are solved as polynomials in `k`; each must come
/// out as a pure multiple of `k`, and its slope is returned.
pub fn chern_oracle(n: usize) -> Result<Vec<Rational>> {
    if n < 1 {
        return domain("the Chern oracle needs n >= 1");
    }
    let m = n;
    let ch_a = chern_of_generator(m);
    let ks = TruncatedSeries::monomial(m, 1, 0, KPoly::linear(Rational::one()));
    let b = TruncatedSeries::monomial(m, 0, 1, KPoly::constant(Rational::one()));

    // Left side: Σ 2/(2j)! (ks + b)^j. The j = m+1 term still reaches s·b^m.
    let pulled_b = &ks + &b;
    let lhs = (1..=m + 1).fold(TruncatedSeries::zero(m), |acc, j| {
        let c = Rational::new(2.into(), factorial(2 * j as u64));
        let term = &pulled_b.pow(j) * &TruncatedSeries::monomial(m, 0, 0, KPoly::constant(c));
        &acc + &term
    });

    // Right side without the unknown part: ks + ch a. Each unknown ε_i(k)
    // multiplies s·(ch a)^i.
    let known = &ks + &ch_a;
    let s = TruncatedSeries::monomial(m, 1, 0, KPoly::constant(Rational::one()));
    let carriers: Vec<TruncatedSeries> = (1..=n).map(|i| &s * &ch_a.pow(i)).collect();

    // Pure-b and bare-s coefficients carry no unknowns and must agree outright.
    for j in 0..=m {
        if lhs.coeff(0, j) != known.coeff(0, j) {
            return Err(Error::Inconsistent(format!("b^{j} coefficients differ")));
        }
    }
    if lhs.coeff(1, 0) != known.coeff(1, 0) {
        return Err(Error::Inconsistent("s coefficients differ".into()));
    }

    // s·b^l: Σ_i ε_i(k) [s b^l](carrier_i) = [s b^l](lhs) − [s b^l](known).
    // carrier_i starts at s b^i with coefficient 1, so the system is triangular.
    let mut solved: Vec<KPoly> = Vec::with_capacity(n);
    for l in 1..=n {
        let mut rhs = &lhs.coeff(1, l).clone() + &known.coeff(1, l).scale(&-Rational::one());
        for (i, x) in solved.iter().enumerate() {
            let c = carriers[i].coeff(1, l);
            rhs = &rhs + &(x * c).scale(&-Rational::one());
        }
        let pivot = carriers[l - 1].coeff(1, l);
        if pivot.degree() != Some(0) || pivot.coeff(0).is_zero() {
            return Err(Error::Inconsistent(format!("no pivot at s·b^{l}")));
        }
        solved.push(rhs.scale(&(Rational::one() / pivot.coeff(0))));
    }

    solved
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let slope = p.coeff(1);
            if p == KPoly::linear(slope.clone()) {
                Ok(slope)
            } else {
                Err(Error::Inconsistent(format!(
                    "ε_{}(k) is not linear in k (constant term {})",
                    i + 1,
                    format(&p.coeff(0))
                )))
            }
        })
        .collect()
}
