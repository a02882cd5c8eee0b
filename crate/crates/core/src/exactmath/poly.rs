use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::ExactMatrix;
use super::rational::{self, Rational};

/// Polynomial with big-integer coefficients, little-endian.
///
/// Trailing zero coefficients are stripped, so the zero polynomial has an
/// empty coefficient list and every other polynomial has a nonzero leading
/// coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `None` unless every coefficient is an integer.
    pub fn from_rationals(c: &[Rational]) -> Option<Self> {
        c.iter()
            .map(|x| rational::is_integer(x).then(|| x.numer().clone()))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// Monic polynomial with the given rational roots.
    pub fn from_roots(roots: &[BigInt]) -> Self {
        roots.iter().fold(Self::from_i64(&[1]), |acc, r| {
            acc.mul(&Self::new(vec![-r.clone(), BigInt::one()]))
        })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.coeffs.iter().cloned().map(rational::from_int).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + rational::from_int(c.clone()))
    }

    /// Evaluates at a square matrix (Horner).
    pub fn eval_matrix(&self, m: &ExactMatrix) -> ExactMatrix {
        let n = m.rows();
        let id = ExactMatrix::identity(n);
        self.coeffs.iter().rev().fold(ExactMatrix::zeros(n, n), |acc, c| {
            &(&acc * m) + &id.scale(&rational::from_int(c.clone()))
        })
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational::serde_bigint_vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        rational::serde_bigint_vec::deserialize(d).map(Self::new)
    }
}

/// Dense polynomials over ℚ as little-endian coefficient vectors.
///
/// Only what field arithmetic needs: trimming, products, Euclidean division
/// and the extended gcd.
pub mod ratpoly {
    use super::*;

    pub fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let z = Rational::zero();
        trim(
            (0..n)
                .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// Quotient and remainder; `b` must be nonzero after trimming.
    pub fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let b = trim(b.to_vec());
        assert!(!b.is_empty(), "polynomial division by zero");
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead = b.last().unwrap().clone();
        let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = r.last().unwrap() / &lead;
            for (i, bi) in b.iter().enumerate() {
                r[i + shift] -= &c * bi;
            }
            q[shift] = c;
            r.pop();
            r = trim(r);
        }
        (trim(q), r)
    }

    /// Returns `(g, s, t)` with `s·a + t·b = g`, `g` monic (or zero).
    pub fn ext_gcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![Rational::one()], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s2 = sub(&s0, &mul(&q, &s1));
            let t2 = sub(&t0, &mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if let Some(lead) = r0.last().cloned() {
            let inv = lead.recip();
            let norm = |p: Vec<Rational>| p.into_iter().map(|x| x * &inv).collect::<Vec<_>>();
            (norm(r0), norm(s0), norm(t0))
        } else {
            (r0, s0, t0)
        }
    }
}
