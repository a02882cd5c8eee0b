//! Free functions on rational vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{self, Rational};

pub type Vector = Vec<Rational>;

pub fn from_i64(v: &[i64]) -> Vector {
    v.iter().map(|&x| rational::rat(x)).collect()
}

pub fn from_ints(v: &[BigInt]) -> Vector {
    v.iter().cloned().map(rational::from_int).collect()
}

pub fn zero(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zero(n);
    v[i] = Rational::one();
    v
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rational], c: &Rational) -> Vector {
    a.iter().map(|x| x * c).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn is_integer(a: &[Rational]) -> bool {
    a.iter().all(rational::is_integer)
}

/// Sum of the given vectors.
pub fn sum<'a>(vs: impl IntoIterator<Item = &'a Vector>, n: usize) -> Vector {
    vs.into_iter().fold(zero(n), |acc, v| add(&acc, v))
}

/// Integer entries of an integral vector. Panics otherwise.
pub fn to_ints(a: &[Rational]) -> Vec<BigInt> {
    a.iter()
        .map(|x| {
            assert!(x.denom().is_one(), "vector is not integral");
            x.numer().clone()
        })
        .collect()
}

/// The primitive integer vector on the ray of `a` (same direction, scaled
/// by a positive rational). `None` for the zero vector.
pub fn primitive(a: &[Rational]) -> Option<Vector> {
    if is_zero(a) {
        return None;
    }
    let lcm = a.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = a.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Some(ints.iter().map(|x| rational::from_int(x / &g)).collect())
}

/// Primitive integer vector with first nonzero coordinate positive.
pub fn primitive_normalized(a: &[Rational]) -> Option<Vector> {
    let p = primitive(a)?;
    let first_neg = p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    Some(if first_neg { p.iter().map(|x| -x).collect() } else { p })
}

pub fn to_string(a: &[Rational]) -> String {
    let parts: Vec<String> = a.iter().map(rational::to_string).collect();
    format!("({})", parts.join(", "))
}
