//! Periodic continued fractions of real quadratic irrationals: the
//! one-dimensional case, where palindromic sails are just symmetric periods.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::rational::{self, Rational};

/// `(P + √D)/Q` with `Q | D − P²` and `D` not a square.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticSurd {
    #[serde(with = "rational::serde_bigint")]
    pub p: BigInt,
    #[serde(with = "rational::serde_bigint")]
    pub d: BigInt,
    #[serde(with = "rational::serde_bigint")]
    pub q: BigInt,
}

fn is_square(d: &BigInt) -> bool {
    !d.is_negative() && {
        let r = d.sqrt();
        &r * &r == *d
    }
}

impl QuadraticSurd {
    pub fn new(p: impl Into<BigInt>, d: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, d, q) = (p.into(), d.into(), q.into());
        if !d.is_positive() || is_square(&d) {
            return Err(Error::invalid(format!("D = {d} must be a positive non-square")));
        }
        if q.is_zero() {
            return Err(Error::invalid("Q must be nonzero"));
        }
        if !(&d - &p * &p).is_multiple_of(&q) {
            return Err(Error::invalid(format!(
                "Q = {q} does not divide D − P² = {}",
                &d - &p * &p
            )));
        }
        Ok(Self { p, d, q })
    }

    /// Brings any `(P + √D)/Q` to canonical form by scaling with `|Q|`.
    pub fn canonical(p: impl Into<BigInt>, d: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, d, q) = (p.into(), d.into(), q.into());
        if q.is_zero() {
            return Err(Error::invalid("Q must be nonzero"));
        }
        if (&d - &p * &p).is_multiple_of(&q) {
            return Self::new(p, d, q);
        }
        let a = q.abs();
        Self::new(&p * &a, &d * &a * &a, &q * &a)
    }

    /// `ω + ω' = 2P/Q`.
    pub fn trace(&self) -> Rational {
        Rational::new(&self.p * 2, self.q.clone())
    }

    /// Exact comparison of the surd with a rational number.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        // (P + √D)/Q ⋛ r  ⇔  √D ⋛ rQ − P, flipped when Q < 0.
        let rhs = r * rational::from_int(self.q.clone()) - rational::from_int(self.p.clone());
        let root_cmp = if rhs.is_negative() {
            Ordering::Greater
        } else {
            rational::from_int(self.d.clone()).cmp(&(&rhs * &rhs))
        };
        if self.q.is_negative() {
            root_cmp.reverse()
        } else {
            root_cmp
        }
    }

    /// `⌊(P + √D)/Q⌋`.
    pub fn floor(&self) -> BigInt {
        let s = self.d.sqrt();
        if self.q.is_positive() {
            (&self.p + &s).div_floor(&self.q)
        } else {
            (&self.p + &s + BigInt::one()).div_floor(&self.q)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicCF {
    #[serde(with = "rational::serde_bigint_vec")]
    pub preperiod: Vec<BigInt>,
    #[serde(with = "rational::serde_bigint_vec")]
    pub period: Vec<BigInt>,
}

impl PeriodicCF {
    /// The first `k` partial quotients.
    pub fn quotients(&self, k: usize) -> Vec<BigInt> {
        self.preperiod
            .iter()
            .chain(self.period.iter().cycle())
            .take(k)
            .cloned()
            .collect()
    }

    /// Convergents `p_k/q_k` of the first `k` partial quotients.
    pub fn convergents(&self, k: usize) -> Vec<Rational> {
        let (mut h, mut h1) = (BigInt::one(), BigInt::zero());
        let (mut g, mut g1) = (BigInt::zero(), BigInt::one());
        self.quotients(k)
            .into_iter()
            .map(|a| {
                let h2 = &a * &h + &h1;
                h1 = std::mem::replace(&mut h, h2);
                let g2 = &a * &g + &g1;
                g1 = std::mem::replace(&mut g, g2);
                Rational::new(h.clone(), g.clone())
            })
            .collect()
    }
}

/// Continued fraction expansion by the `(P, Q)` recurrence; the period
/// starts at the first state that repeats.
pub fn expand(s: &QuadraticSurd) -> PeriodicCF {
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut quotients = Vec::new();
    let mut cur = s.clone();
    loop {
        if let Some(&start) = seen.get(&(cur.p.clone(), cur.q.clone())) {
            let period = quotients.split_off(start);
            return PeriodicCF {
                preperiod: quotients,
                period,
            };
        }
        seen.insert((cur.p.clone(), cur.q.clone()), quotients.len());
        let a = cur.floor();
        let p = &a * &cur.q - &cur.p;
        let q = (&cur.d - &p * &p) / &cur.q;
        quotients.push(a);
        cur = QuadraticSurd { p, d: cur.d, q };
    }
}

/// True iff the reversed period is a cyclic rotation of the period.
pub fn is_palindromic_period(cf: &PeriodicCF) -> bool {
    let n = cf.period.len();
    let rev: Vec<&BigInt> = cf.period.iter().rev().collect();
    (0..n).any(|k| (0..n).all(|i| &cf.period[(i + k) % n] == rev[i]))
}

/// Smallest `m` such that the period is a power of its first `m` entries.
pub fn primitive_period_len(period: &[BigInt]) -> usize {
    let n = period.len();
    (1..=n)
        .find(|&m| n.is_multiple_of(m) && (0..n).all(|i| period[i] == period[i % m]))
        .unwrap_or(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceReport {
    #[serde(with = "rational::serde_rational")]
    pub trace: Rational,
    /// `Tr ω ∈ {0, 1}`.
    pub trace_in_01: bool,
    pub palindromic: bool,
}

pub fn check_trace_criterion(s: &QuadraticSurd) -> TraceReport {
    let trace = s.trace();
    let trace_in_01 = trace.is_zero() || trace.is_one();
    TraceReport {
        trace,
        trace_in_01,
        palindromic: is_palindromic_period(&expand(s)),
    }
}

/// Expansion together with the palindromicity verdict and the trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SailSummary {
    #[serde(with = "rational::serde_bigint_vec")]
    pub preperiod: Vec<BigInt>,
    #[serde(with = "rational::serde_bigint_vec")]
    pub period: Vec<BigInt>,
    pub palindromic: bool,
    #[serde(with = "rational::serde_rational")]
    pub trace: Rational,
}

pub fn summarize(s: &QuadraticSurd) -> SailSummary {
    let cf = expand(s);
    SailSummary {
        palindromic: is_palindromic_period(&cf),
        trace: s.trace(),
        preperiod: cf.preperiod,
        period: cf.period,
    }
}

/// First canonical surd with a non-palindromic period, scanning `D` up to
/// `max_d`, then `Q = 1, …, max_pq`, then `P = 0, …, max_pq`.
pub fn find_nonpalindromic(max_d: i64, max_pq: i64) -> Option<QuadraticSurd> {
    (2..=max_d)
        .flat_map(|d| (1..=max_pq).flat_map(move |q| (0..=max_pq).map(move |p| (p, d, q))))
        .filter_map(|(p, d, q)| QuadraticSurd::new(p, d, q).ok())
        .find(|s| !is_palindromic_period(&expand(s)))
}
