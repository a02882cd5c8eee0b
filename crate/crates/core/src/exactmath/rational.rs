//! Scalar helpers around [`BigRational`].
//!
//! `num_rational::BigRational` already keeps the canonical form we need
//! (positive denominator, reduced, zero as `0/1`), so [`Rational`] is an alias
//! and this module only adds construction shortcuts and the string encoding
//! used by every JSON surface: `"p/q"`, or `"p"` when `q = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn floor(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

pub fn ceil(r: &Rational) -> BigInt {
    -((-r.numer()).div_floor(r.denom()))
}

/// Formats as `p/q`, or `p` for integers.
pub fn to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q` (q nonzero). Whitespace is not accepted.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::invalid(format!("malformed rational {s:?}"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(from_int).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Serde adapter: a single rational as a string.
pub mod serde_rational {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(de::Error::custom)
    }
}

/// Serde adapter: a vector of rationals as an array of strings.
pub mod serde_rational_vec {
    use super::*;
    use serde::{de, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&to_string(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse(s).map_err(de::Error::custom)).collect()
    }
}

/// Serde adapter: a list of rational vectors.
pub mod serde_rational_vecs {
    use super::*;
    use serde::{de, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for row in v {
            let strs: Vec<String> = row.iter().map(to_string).collect();
            seq.serialize_element(&strs)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Rational>>, D::Error> {
        let v = Vec::<Vec<String>>::deserialize(d)?;
        v.iter()
            .map(|row| row.iter().map(|s| parse(s).map_err(de::Error::custom)).collect())
            .collect()
    }
}

/// Serde adapter: a fixed-size array of rational vectors.
pub mod serde_rational_array {
    use super::*;
    use serde::{de, Deserializer, Serializer};

    pub fn serialize<S: Serializer, const N: usize>(
        v: &[Vec<Rational>; N],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        super::serde_rational_vecs::serialize(v, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const N: usize>(
        d: D,
    ) -> std::result::Result<[Vec<Rational>; N], D::Error> {
        let v = super::serde_rational_vecs::deserialize(d)?;
        let len = v.len();
        v.try_into()
            .map_err(|_| de::Error::custom(format!("expected {N} vectors, got {len}")))
    }
}

/// Serde adapter: a big integer as a decimal string.
pub mod serde_bigint {
    use num_bigint::BigInt;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse()
            .map_err(|_| de::Error::custom(format!("malformed integer {s:?}")))
    }
}

/// Serde adapter: big integers as decimal strings.
pub mod serde_bigint_vec {
    use num_bigint::BigInt;
    use serde::{de, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for n in v {
            seq.serialize_element(&n.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| de::Error::custom(format!("malformed integer {s:?}")))
            })
            .collect()
    }
}
