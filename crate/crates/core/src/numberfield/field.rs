use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::modp;
use super::roots;
use crate::error::{Error, Result};
use crate::exactmath::poly::ratpoly;
use crate::exactmath::rational::{self, Rational};
use crate::exactmath::vector::{self, Vector};
use crate::exactmath::{ExactMatrix, IntPolynomial};

/// A totally real cyclic number field `ℚ[x]/(f)` with a chosen generator σ
/// of its Galois group, stored as a matrix acting on power-basis coordinates.
#[derive(Clone)]
pub struct CyclicField {
    degree: usize,
    minpoly: IntPolynomial,
    sigma: ExactMatrix,
    sigma_powers: Vec<ExactMatrix>,
}

impl CyclicField {
    /// Validates and builds the field.
    ///
    /// Checks: `f` monic, irreducible (certified by an inert prime), with `n`
    /// distinct real roots; `σ` an order-`n` algebra automorphism sending θ
    /// to a root of `f`.
    pub fn new(minpoly: IntPolynomial, sigma: ExactMatrix) -> Result<Self> {
        let n = minpoly
            .degree()
            .filter(|&d| d >= 2)
            .ok_or_else(|| Error::invalid("field degree must be at least 2"))?;
        if !minpoly.is_monic() {
            return Err(Error::invalid("minimal polynomial must be monic"));
        }
        if sigma.rows() != n || sigma.cols() != n {
            return Err(Error::Dimension(format!("sigma must be {n}x{n}")));
        }
        if !modp::certify_irreducible(&minpoly) {
            return Err(Error::invalid(format!("{minpoly} is not certified irreducible")));
        }
        if roots::real_root_count(&minpoly) != n {
            return Err(Error::invalid(format!("{minpoly} is not totally real")));
        }
        let mut sigma_powers = vec![ExactMatrix::identity(n)];
        for k in 1..n {
            let next = &sigma * &sigma_powers[k - 1];
            if next.is_identity() {
                return Err(Error::invalid(format!("sigma has order {k} < {n}")));
            }
            sigma_powers.push(next);
        }
        if !(&sigma * &sigma_powers[n - 1]).is_identity() {
            return Err(Error::invalid("sigma^n is not the identity"));
        }
        let field = Self {
            degree: n,
            minpoly,
            sigma,
            sigma_powers,
        };
        // σ(θ) must be a root of f, and σ must respect multiplication; for a
        // linear map fixing 1 the first implies the second.
        let s_theta = field.sigma.col(1);
        if field.sigma.col(0) != vector::unit(n, 0) {
            return Err(Error::invalid("sigma does not fix 1"));
        }
        for k in 2..n {
            let expected = field.pow_coords(&s_theta, k);
            if field.sigma.col(k) != expected {
                return Err(Error::invalid("sigma is not multiplicative"));
            }
        }
        let mut value = vector::zero(n);
        for c in minpoly_rev(&field.minpoly) {
            value = field.mul_coords(&value, &s_theta);
            value[0] += c;
        }
        if !vector::is_zero(&value) {
            return Err(Error::invalid("sigma(theta) is not a root of the minimal polynomial"));
        }
        Ok(field)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn sigma(&self) -> &ExactMatrix {
        &self.sigma
    }

    /// `σ^k` for any integer `k` (taken mod n).
    pub fn sigma_power(&self, k: i64) -> &ExactMatrix {
        &self.sigma_powers[k.rem_euclid(self.degree as i64) as usize]
    }

    /// Product of power-basis coordinate vectors, reduced mod `f`.
    pub(crate) fn mul_coords(&self, a: &[Rational], b: &[Rational]) -> Vector {
        let n = self.degree;
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let f = self.minpoly.coeffs();
        for k in (n..prod.len()).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for (i, fi) in f.iter().take(n).enumerate() {
                prod[k - n + i] -= &c * fi;
            }
        }
        prod.truncate(n);
        prod
    }

    fn pow_coords(&self, a: &[Rational], k: usize) -> Vector {
        let mut acc = vector::unit(self.degree, 0);
        for _ in 0..k {
            acc = self.mul_coords(&acc, a);
        }
        acc
    }
}

fn minpoly_rev(f: &IntPolynomial) -> impl Iterator<Item = Rational> + '_ {
    f.coeffs().iter().rev().map(|c| rational::from_int(c.clone()))
}

impl PartialEq for CyclicField {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly && self.sigma == other.sigma
    }
}

impl Eq for CyclicField {}

impl fmt::Debug for CyclicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicField(ℚ[x]/({}), σ = {:?})", self.minpoly, self.sigma)
    }
}

#[derive(Serialize, Deserialize)]
struct FieldJson {
    degree: usize,
    minpoly: IntPolynomial,
    sigma: ExactMatrix,
}

impl Serialize for CyclicField {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FieldJson {
            degree: self.degree,
            minpoly: self.minpoly.clone(),
            sigma: self.sigma.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclicField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = FieldJson::deserialize(d)?;
        if raw.minpoly.degree() != Some(raw.degree) {
            return Err(serde::de::Error::custom("degree does not match the minimal polynomial"));
        }
        CyclicField::new(raw.minpoly, raw.sigma).map_err(serde::de::Error::custom)
    }
}

/// Shared handle to a field; elements keep one so arithmetic can check owners.
pub type FieldRef = Arc<CyclicField>;

/// Element of a [`CyclicField`] in power-basis coordinates.
#[derive(Clone)]
pub struct FieldElement {
    field: FieldRef,
    coords: Vector,
}

/// Constructors that need the shared handle.
pub trait FieldRefExt {
    fn element(&self, coords: Vector) -> Result<FieldElement>;
    fn from_rational(&self, c: Rational) -> FieldElement;
    fn from_i64(&self, c: i64) -> FieldElement {
        self.from_rational(rational::rat(c))
    }
    fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }
    fn one(&self) -> FieldElement {
        self.from_i64(1)
    }
    /// The class of `x`.
    fn theta(&self) -> FieldElement;
}

impl FieldRefExt for FieldRef {
    fn element(&self, coords: Vector) -> Result<FieldElement> {
        if coords.len() != self.degree {
            return Err(Error::Dimension(format!(
                "{} coordinates for a degree-{} field",
                coords.len(),
                self.degree
            )));
        }
        Ok(FieldElement {
            field: self.clone(),
            coords,
        })
    }

    fn from_rational(&self, c: Rational) -> FieldElement {
        let mut coords = vector::zero(self.degree);
        coords[0] = c;
        FieldElement {
            field: self.clone(),
            coords,
        }
    }

    fn theta(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coords: vector::unit(self.degree, 1),
        }
    }
}

impl FieldElement {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.coords)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|c| c.is_one())
    }

    /// `Some(c)` when the element is the rational number `c`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coords[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coords[0].clone())
    }

    fn same_field(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "field elements from different fields"
        );
    }

    fn with(&self, coords: Vector) -> Self {
        Self {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.with(vector::scale(&self.coords, c))
    }

    pub fn pow(&self, k: usize) -> Self {
        self.with(self.field.pow_coords(&self.coords, k))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = self.field.minpoly.to_rationals();
        let a = ratpoly::trim(self.coords.clone());
        let (g, s, _) = ratpoly::ext_gcd(&a, &f);
        if g.len() != 1 {
            // Cannot happen for an irreducible modulus.
            return Err(Error::DivisionByZero);
        }
        let mut coords = s;
        coords.resize(self.field.degree, Rational::zero());
        Ok(self.with(coords))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other);
        Ok(self * &other.inverse()?)
    }

    /// `σ^k(a)` for any integer `k`.
    pub fn apply_sigma(&self, k: i64) -> Self {
        self.with(self.field.sigma_power(k).mul_vec(&self.coords))
    }

    /// Matrix of `x ↦ a·x` on power-basis coordinates.
    pub fn mul_matrix(&self) -> ExactMatrix {
        let n = self.field.degree;
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.field.mul_coords(&self.coords, &vector::unit(n, j)))
            .collect();
        ExactMatrix::from_columns(&cols).expect("square")
    }

    pub fn trace(&self) -> Rational {
        self.mul_matrix().trace()
    }

    pub fn norm(&self) -> Rational {
        self.mul_matrix().det().expect("square")
    }

    pub fn trace_and_norm(&self) -> (Rational, Rational) {
        let m = self.mul_matrix();
        (m.trace(), m.det().expect("square"))
    }

    /// Monic minimal polynomial over ℚ.
    pub fn minpoly_rational(&self) -> Vec<Rational> {
        let n = self.field.degree;
        let mut powers = vec![vector::unit(n, 0)];
        loop {
            let k = powers.len();
            let next = self.field.mul_coords(&powers[k - 1], &self.coords);
            let m = ExactMatrix::from_columns(&powers).expect("equal lengths");
            if let Some(c) = m.solve(&next) {
                let mut p: Vec<Rational> = c.into_iter().map(|x| -x).collect();
                p.push(Rational::one());
                return p;
            }
            powers.push(next);
        }
    }

    /// Minimal polynomial scaled to a primitive integer polynomial with
    /// positive leading coefficient; monic exactly for algebraic integers.
    pub fn minpoly(&self) -> IntPolynomial {
        let p = self.minpoly_rational();
        let l = p.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = p.iter().map(|x| x.numer() * (&l / x.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        IntPolynomial::new(ints.into_iter().map(|x| x / &g).collect())
    }

    /// Sign of the image of `a` under the `i`-th real embedding (roots of the
    /// defining polynomial in increasing order). Errors on zero.
    pub fn sign_at(&self, iso: &roots::RootIsolation, i: usize) -> Result<i8> {
        roots::refine_sign(iso, i, &self.coords)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let a = c.abs();
            let monomial = match i {
                0 => String::new(),
                1 => "θ".to_string(),
                _ => format!("θ^{i}"),
            };
            let body = match (i, a.is_one()) {
                (0, _) => rational::to_string(&a),
                (_, true) => monomial,
                _ => format!("{}·{monomial}", rational::to_string(&a)),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational::serde_rational_vec::serialize(&self.coords, s)
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.same_field(rhs);
        self.with(vector::add(&self.coords, &rhs.coords))
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.same_field(rhs);
        self.with(vector::sub(&self.coords, &rhs.coords))
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.same_field(rhs);
        self.with(self.field.mul_coords(&self.coords, &rhs.coords))
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.coords.iter().map(|x| -x).collect())
    }
}

/// Determinant of the coordinate matrix of the given elements (as columns).
pub fn coordinate_det(elems: &[FieldElement]) -> Rational {
    let cols: Vec<Vector> = elems.iter().map(|e| e.coords.clone()).collect();
    ExactMatrix::from_columns(&cols)
        .and_then(|m| m.det())
        .unwrap_or_else(|_| Rational::zero())
}

/// True iff the elements are ℚ-linearly independent.
pub fn independent(elems: &[FieldElement]) -> bool {
    let cols: Vec<Vector> = elems.iter().map(|e| e.coords.clone()).collect();
    ExactMatrix::from_columns(&cols).is_ok_and(|m| m.rank() == elems.len())
}
