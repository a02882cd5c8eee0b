//! Irreducibility certificates via reduction modulo small primes.
//!
//! If a monic integer polynomial stays irreducible modulo some prime, it is
//! irreducible over ℚ. For cyclic Galois fields an inert prime always exists
//! (any prime whose Frobenius generates the group), so scanning small primes
//! finds one quickly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::gaussian::is_prime;
use crate::exactmath::IntPolynomial;

/// Primes tried before giving up.
const MAX_PRIMES: usize = 400;

type Poly = Vec<u64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn inv_mod(a: u64, q: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(q as i128));
    e.x.rem_euclid(q as i128) as u64
}

fn rem(mut a: Poly, b: &[u64], q: u64) -> Poly {
    let inv = inv_mod(*b.last().unwrap(), q);
    while a.len() >= b.len() {
        let c = a.last().unwrap() * inv % q;
        let shift = a.len() - b.len();
        for (i, bi) in b.iter().enumerate() {
            a[i + shift] = (a[i + shift] + q - c * bi % q) % q;
        }
        a.pop();
        a = trim(a);
    }
    a
}

fn mulmod(a: &[u64], b: &[u64], f: &[u64], q: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % q;
        }
    }
    rem(trim(out), f, q)
}

fn powmod(base: &[u64], mut e: u64, f: &[u64], q: u64) -> Poly {
    let mut acc = vec![1u64];
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, f, q);
        }
        b = mulmod(&b, &b, f, q);
        e >>= 1;
    }
    acc
}

fn gcd(mut a: Poly, mut b: Poly, q: u64) -> Poly {
    while !b.is_empty() {
        let r = rem(a, &b, q);
        a = b;
        b = r;
    }
    a
}

fn sub_x(p: &[u64], q: u64) -> Poly {
    let mut p = p.to_vec();
    if p.len() < 2 {
        p.resize(2, 0);
    }
    p[1] = (p[1] + q - 1) % q;
    trim(p)
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test over `F_q` for a monic `f` of degree `n`.
fn irreducible_mod(f: &[u64], q: u64) -> bool {
    let n = f.len() - 1;
    let x = vec![0, 1];
    // frob[k] = x^(q^k) mod f
    let mut frob = vec![rem(x.clone(), f, q)];
    for _ in 0..n {
        let next = powmod(frob.last().unwrap(), q, f, q);
        frob.push(next);
    }
    if !sub_x(&frob[n], q).is_empty() {
        return false;
    }
    prime_factors(n).into_iter().all(|r| {
        let g = gcd(f.to_vec(), sub_x(&frob[n / r], q), q);
        g.len() == 1
    })
}

fn reduce(f: &IntPolynomial, q: u64) -> Poly {
    let qb = BigInt::from(q);
    f.coeffs()
        .iter()
        .map(|c| c.mod_floor(&qb).to_u64().expect("reduced below q"))
        .collect()
}

/// True iff some small prime certifies that the monic `f` is irreducible.
pub fn certify_irreducible(f: &IntPolynomial) -> bool {
    let Some(n) = f.degree() else { return false };
    if n <= 1 {
        return n == 1;
    }
    if !f.is_monic() {
        return false;
    }
    (2u64..)
        .filter(|&q| is_prime(q))
        .take(MAX_PRIMES)
        .any(|q| irreducible_mod(&trim(reduce(f, q)), q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_cases() {
        assert!(certify_irreducible(&IntPolynomial::from_i64(&[-1, 1, 1])));
        assert!(certify_irreducible(&IntPolynomial::from_i64(&[-1, -2, 1, 1])));
        assert!(certify_irreducible(&IntPolynomial::from_i64(&[1, -1, -6, 1, 1])));
        assert!(!certify_irreducible(&IntPolynomial::from_i64(&[-4, 0, 1])));
        // (x² − 2)(x² − 3): reducible, though without rational roots
        assert!(!certify_irreducible(&IntPolynomial::from_i64(&[6, 0, -5, 0, 1])));
    }
}
