//! Real root isolation by Sturm sequences, and sign determination of field
//! elements under each real embedding.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::poly::ratpoly;
use crate::exactmath::rational::{self, frac, Rational};
use crate::exactmath::IntPolynomial;

/// Disjoint half-open intervals `(lo, hi]`, one per real root, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootIsolation {
    pub polynomial: IntPolynomial,
    #[serde(serialize_with = "ser_intervals")]
    pub intervals: Vec<(Rational, Rational)>,
    #[serde(skip)]
    sturm: Vec<Vec<Rational>>,
}

fn ser_intervals<S: serde::Serializer>(v: &[(Rational, Rational)], s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<Rational>> = v.iter().map(|(a, b)| vec![a.clone(), b.clone()]).collect();
    rational::serde_rational_vecs::serialize(&rows, s)
}

fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn sturm_sequence(f: &IntPolynomial) -> Vec<Vec<Rational>> {
    let p0 = f.to_rationals();
    let p1 = f.derivative().to_rationals();
    let mut seq = vec![p0, p1];
    loop {
        let k = seq.len();
        if seq[k - 1].is_empty() {
            seq.pop();
            return seq;
        }
        let (_, r) = ratpoly::divrem(&seq[k - 2], &seq[k - 1]);
        if r.is_empty() {
            return seq;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
}

fn sign_changes(seq: &[Vec<Rational>], x: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in `(lo, hi]`.
fn count_in(seq: &[Vec<Rational>], lo: &Rational, hi: &Rational) -> usize {
    sign_changes(seq, lo) - sign_changes(seq, hi)
}

/// Cauchy bound: every real root lies in `(−B, B)`.
fn cauchy_bound(f: &IntPolynomial) -> Rational {
    let c = f.to_rationals();
    let lead = c.last().unwrap().abs();
    let m = c[..c.len() - 1]
        .iter()
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + m / lead
}

/// Number of distinct real roots of `f`.
pub fn real_root_count(f: &IntPolynomial) -> usize {
    if f.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let seq = sturm_sequence(f);
    let b = cauchy_bound(f);
    count_in(&seq, &-&b, &b)
}

/// True iff `f` has `deg f` distinct real roots.
pub fn has_distinct_real_roots(f: &IntPolynomial) -> bool {
    f.degree().is_some_and(|n| real_root_count(f) == n)
}

/// Isolates every real root of `f` (squarefree or not; roots are distinct).
pub fn isolate_roots(f: &IntPolynomial) -> Result<RootIsolation> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::invalid("cannot isolate roots of a constant"));
    }
    let seq = sturm_sequence(f);
    let b = cauchy_bound(f);
    let mut out = Vec::new();
    let mut stack = vec![(-&b, b)];
    while let Some((lo, hi)) = stack.pop() {
        match count_in(&seq, &lo, &hi) {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) * frac(1, 2);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort();
    Ok(RootIsolation {
        polynomial: f.clone(),
        intervals: out,
        sturm: seq,
    })
}

/// Interval hull of `p(x)` for `x ∈ [lo, hi]` by interval Horner.
fn interval_eval(p: &[Rational], lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut acc = (Rational::zero(), Rational::zero());
    for c in p.iter().rev() {
        let prods = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
        let min = prods.iter().min().unwrap().clone();
        let max = prods.iter().max().unwrap().clone();
        acc = (min + c, max + c);
    }
    acc
}

/// Sign (±1) of `Σ coords[k]·r^k` at the `i`-th isolated root `r`.
///
/// Bisects the isolating interval until the interval image of the
/// polynomial excludes zero, or the root turns out to be rational.
pub fn refine_sign(iso: &RootIsolation, i: usize, coords: &[Rational]) -> Result<i8> {
    let p = ratpoly::trim(coords.to_vec());
    if p.is_empty() {
        return Err(Error::invalid("sign of zero is undefined"));
    }
    let (mut lo, mut hi) = iso
        .intervals
        .get(i)
        .cloned()
        .ok_or_else(|| Error::invalid(format!("no embedding with index {i}")))?;
    let f = iso.polynomial.to_rationals();
    let sign = |v: &Rational| if v.is_positive() { 1 } else { -1 };
    loop {
        if eval(&f, &hi).is_zero() {
            let v = eval(&p, &hi);
            if v.is_zero() {
                // p vanishes at a rational root of f: only possible when
                // f is reducible, which field construction excludes.
                return Err(Error::invalid("element vanishes at this embedding"));
            }
            return Ok(sign(&v));
        }
        let (a, b) = interval_eval(&p, &lo, &hi);
        if a.is_positive() || b.is_negative() {
            return Ok(sign(&a));
        }
        let mid = (&lo + &hi) * frac(1, 2);
        if count_in(&iso.sturm, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;

    #[test]
    fn golden_ratio_roots() {
        let f = IntPolynomial::from_i64(&[-1, 1, 1]);
        let iso = isolate_roots(&f).unwrap();
        assert_eq!(iso.intervals.len(), 2);
        let theta = [rat(0), rat(1)];
        assert_eq!(refine_sign(&iso, 0, &theta).unwrap(), -1);
        assert_eq!(refine_sign(&iso, 1, &theta).unwrap(), 1);
        for i in 0..2 {
            assert_eq!(refine_sign(&iso, i, &[rat(1)]).unwrap(), 1);
            assert_eq!(refine_sign(&iso, i, &[rat(-3)]).unwrap(), -1);
        }
        assert!(refine_sign(&iso, 0, &[rat(0), rat(0)]).is_err());
    }

    #[test]
    fn sign_of_tiny_difference() {
        // θ − 0.618 at the positive root 0.6180339…: positive but close.
        let f = IntPolynomial::from_i64(&[-1, 1, 1]);
        let iso = isolate_roots(&f).unwrap();
        let c = [-frac(618, 1000), rat(1)];
        assert_eq!(refine_sign(&iso, 1, &c).unwrap(), 1);
        let c = [-frac(6181, 10000), rat(1)];
        assert_eq!(refine_sign(&iso, 1, &c).unwrap(), -1);
    }

    #[test]
    fn rational_roots_are_handled() {
        let f = IntPolynomial::from_i64(&[0, -1, 0, 1]); // x³ − x
        let iso = isolate_roots(&f).unwrap();
        assert_eq!(iso.intervals.len(), 3);
        assert_eq!(refine_sign(&iso, 1, &[rat(1), rat(1)]).unwrap(), 1);
        assert_eq!(refine_sign(&iso, 0, &[rat(1), rat(2)]).unwrap(), -1);
    }

    #[test]
    fn counts() {
        assert_eq!(real_root_count(&IntPolynomial::from_i64(&[1, 0, 1])), 0);
        assert!(has_distinct_real_roots(&IntPolynomial::from_i64(&[1, -1, -6, 1, 1])));
        assert!(!has_distinct_real_roots(&IntPolynomial::from_i64(&[1, -2, 1])));
    }
}
