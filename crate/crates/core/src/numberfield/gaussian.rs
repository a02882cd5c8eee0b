//! Real cyclic subfields of prime cyclotomic fields, generated by Gaussian
//! periods.
//!
//! All arithmetic happens in `ℤ[x]/(x^p − 1)`. An element there vanishes in
//! `ℤ[ζ_p]` iff its `p` coefficients are all equal, so subtracting the last
//! coefficient everywhere gives a canonical representative in the basis
//! `1, ζ, …, ζ^{p−2}`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::field::{self, CyclicField, FieldElement, FieldRef, FieldRefExt};
use crate::error::{Error, Result};
use crate::exactmath::rational;
use crate::exactmath::vector::{self, Vector};
use crate::exactmath::{ExactMatrix, IntPolynomial};

/// Deterministic trial-division primality.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let (mut acc, mut b) = (1u64, b % m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("primes have primitive roots")
}

/// Element of `ℤ[x]/(x^p − 1)`.
#[derive(Clone, PartialEq, Eq)]
struct Cyc(Vec<BigInt>);

impl Cyc {
    fn constant(p: usize, c: i64) -> Self {
        let mut v = vec![BigInt::zero(); p];
        v[0] = BigInt::from(c);
        Cyc(v)
    }

    fn add(&self, o: &Self) -> Self {
        Cyc(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn neg(&self) -> Self {
        Cyc(self.0.iter().map(|a| -a).collect())
    }

    fn mul(&self, o: &Self) -> Self {
        let p = self.0.len();
        let mut out = vec![BigInt::zero(); p];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[(i + j) % p] += a * b;
            }
        }
        Cyc(out)
    }

    /// Coordinates in `1, ζ, …, ζ^{p−2}`.
    fn canonical(&self) -> Vec<BigInt> {
        let last = self.0.last().unwrap().clone();
        self.0[..self.0.len() - 1].iter().map(|c| c - &last).collect()
    }

    /// The rational integer this element equals, if it is one.
    fn as_integer(&self) -> Option<BigInt> {
        let c = self.canonical();
        c[1..].iter().all(Zero::is_zero).then(|| c[0].clone())
    }
}

/// The degree-`n` subfield of `ℚ(ζ_p + ζ_p⁻¹)` together with the Gaussian
/// period ω = η₀ (which is also the power-basis generator θ).
///
/// σ acts as `ζ ↦ ζ^g` for the smallest primitive root `g`, so σ(η_j) = η_{j+1}.
pub fn gaussian_period_field(p: u64, n: usize) -> Result<(FieldRef, FieldElement)> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if n < 2 || !((p - 1) / 2).is_multiple_of(n as u64) || p == 2 {
        return Err(Error::invalid(format!("{n} must be at least 2 and divide ({p} − 1)/2")));
    }
    let pu = p as usize;
    let g = primitive_root(p);
    let f = (pu - 1) / n;
    // η_j = Σ_{k<f} ζ^{g^{j + n·k}}
    let periods: Vec<Cyc> = (0..n)
        .map(|j| {
            let mut v = vec![BigInt::zero(); pu];
            for k in 0..f {
                v[pow_mod(g, (j + n * k) as u64, p) as usize] += 1;
            }
            Cyc(v)
        })
        .collect();

    // Π (x − η_j), coefficients little-endian in ℤ[ζ].
    let mut poly = vec![Cyc::constant(pu, 1)];
    for eta in &periods {
        let mut next = vec![Cyc::constant(pu, 0); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].add(&c.mul(eta).neg());
        }
        poly = next;
    }
    let coeffs = poly
        .iter()
        .map(Cyc::as_integer)
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::verification("period polynomial has non-rational coefficients"))?;
    let minpoly = IntPolynomial::new(coeffs);

    // Express η₁ in the power basis of η₀ by solving an exact linear system.
    let mut powers = vec![Cyc::constant(pu, 1)];
    for k in 1..n {
        powers.push(powers[k - 1].mul(&periods[0]));
    }
    let cols: Vec<Vector> = powers.iter().map(|c| vector::from_ints(&c.canonical())).collect();
    let system = ExactMatrix::from_columns(&cols)?;
    let target = vector::from_ints(&periods[1].canonical());
    let s_theta = system
        .solve(&target)
        .ok_or_else(|| Error::verification("σ(η₀) is not in the span of powers of η₀"))?;

    // Columns of σ are σ(θ)^k; multiply in ℚ[x]/(f) by hand since the field
    // is not validated yet.
    let reduce = |mut v: Vec<rational::Rational>| {
        let fc = minpoly.coeffs();
        for k in (n..v.len()).rev() {
            let c = std::mem::take(&mut v[k]);
            for (i, fi) in fc.iter().take(n).enumerate() {
                v[k - n + i] -= &c * fi;
            }
        }
        v.truncate(n);
        v
    };
    let mut sigma_cols = vec![vector::unit(n, 0)];
    for k in 1..n {
        let prev = &sigma_cols[k - 1];
        let mut prod = vec![rational::rat(0); 2 * n - 1];
        for (i, a) in prev.iter().enumerate() {
            for (j, b) in s_theta.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        sigma_cols.push(reduce(prod));
    }
    let sigma = ExactMatrix::from_columns(&sigma_cols)?;
    let field = Arc::new(CyclicField::new(minpoly, sigma)?);
    let omega = field.theta();
    let orbit: Vec<FieldElement> = (0..n as i64).map(|k| omega.apply_sigma(k)).collect();
    if !field::independent(&orbit) {
        return Err(Error::verification("Gaussian periods do not form a normal basis"));
    }
    Ok((field, omega))
}
