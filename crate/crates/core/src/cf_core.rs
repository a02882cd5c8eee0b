//! Algebraic continued fractions described by field data, and their
//! symmetries.
//!
//! A fraction is given by `ℓ = (1, α₁, …, α_{n−1})` over a cyclic field `K`.
//! Its eigenlines are the real images `l_i = φ(σ^{i−1} ℓ)` for a fixed real
//! embedding `φ`, so every identity about lines is checked exactly inside `K`.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::rational::{self, Rational};
use crate::exactmath::vector::{self, Vector};
use crate::exactmath::{kernel_basis, ExactMatrix, IntPolynomial, KernelMode};
use crate::numberfield::field::independent;
use crate::numberfield::{isolate_roots, roots, CyclicField, FieldElement, FieldRef, FieldRefExt};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicCF {
    field: FieldRef,
    alphas: Vec<FieldElement>,
    a: Option<ExactMatrix>,
}

impl AlgebraicCF {
    /// `alphas` must start with 1 and be ℚ-independent. A hyperbolic witness
    /// `a`, when given, must have `ℓ` as an eigenvector and an irreducible,
    /// totally real characteristic polynomial.
    pub fn new(field: FieldRef, alphas: Vec<FieldElement>, a: Option<ExactMatrix>) -> Result<Self> {
        let n = field.degree();
        if alphas.len() != n {
            return Err(Error::Dimension(format!(
                "need {n} basis elements, got {}",
                alphas.len()
            )));
        }
        if alphas
            .iter()
            .any(|x| !Arc::ptr_eq(x.field(), &field) && **x.field() != *field)
        {
            return Err(Error::invalid("basis elements from a different field"));
        }
        if !alphas[0].is_one() {
            return Err(Error::invalid("the first basis element must be 1"));
        }
        if !independent(&alphas) {
            return Err(Error::invalid("basis elements are linearly dependent over ℚ"));
        }
        let cf = Self { field, alphas, a: None };
        match a {
            Some(a) => cf.with_witness(a),
            None => Ok(cf),
        }
    }

    /// Attaches a hyperbolic witness after checking it.
    pub fn with_witness(mut self, a: ExactMatrix) -> Result<Self> {
        let n = self.degree();
        if a.rows() != n || a.cols() != n || !a.is_integer() {
            return Err(Error::invalid(format!("witness must be an integer {n}x{n} matrix")));
        }
        let w = self.apply(&a);
        let lambda = w[0].clone();
        if (0..n).any(|r| w[r] != &lambda * &self.alphas[r]) {
            return Err(Error::invalid("the basis vector is not an eigenvector of the witness"));
        }
        if lambda.minpoly().degree() != Some(n) {
            return Err(Error::invalid("witness has a reducible characteristic polynomial"));
        }
        if !roots::has_distinct_real_roots(&a.charpoly()?) {
            return Err(Error::invalid("witness has non-real eigenvalues"));
        }
        self.a = Some(a);
        Ok(self)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn alphas(&self) -> &[FieldElement] {
        &self.alphas
    }

    pub fn witness(&self) -> Option<&ExactMatrix> {
        self.a.as_ref()
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    /// `M·ℓ` as field elements.
    pub fn apply(&self, m: &ExactMatrix) -> Vec<FieldElement> {
        (0..m.rows())
            .map(|r| (0..m.cols()).fold(self.field.zero(), |acc, c| &acc + &self.alphas[c].scale(&m[(r, c)])))
            .collect()
    }

    /// Field element `Σ v_r α*_r` for the trace-dual basis `α*`. Its images
    /// under the embeddings `φ∘σ^{i}` are the coordinates of `v` along the
    /// eigenlines `l_{i+1}`.
    pub fn eigen_coordinate(&self, v: &[Rational]) -> Result<FieldElement> {
        let n = self.degree();
        if v.len() != n {
            return Err(Error::Dimension(format!(
                "vector of length {} in dimension {n}",
                v.len()
            )));
        }
        let mut t = ExactMatrix::zeros(n, n);
        for r in 0..n {
            for s in 0..n {
                t[(r, s)] = (&self.alphas[r] * &self.alphas[s]).trace();
            }
        }
        // α*_s = Σ_t (T⁻¹)_{ts} α_t, so Σ_s v_s α*_s = Σ_t (T⁻¹ v)_t α_t.
        let c = t.inverse()?.mul_vec(v);
        Ok(c.iter()
            .zip(&self.alphas)
            .fold(self.field.zero(), |acc, (x, a)| &acc + &a.scale(x)))
    }

    /// Signs of the coordinates of `v` along `l₁, …, lₙ` under the embedding
    /// with index `embedding`. Zero coordinates are reported as 0.
    pub fn cone_signs(&self, v: &[Rational], embedding: usize) -> Result<Vec<i8>> {
        let theta = self.eigen_coordinate(v)?;
        let iso = isolate_roots(self.field.minpoly())?;
        (0..self.degree() as i64)
            .map(|i| {
                let c = theta.apply_sigma(i);
                if c.is_zero() {
                    Ok(0)
                } else {
                    c.sign_at(&iso, embedding)
                }
            })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct CfJson {
    field: CyclicField,
    #[serde(with = "rational::serde_rational_vecs")]
    alphas: Vec<Vector>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    a: Option<ExactMatrix>,
}

impl Serialize for AlgebraicCF {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CfJson {
            field: (*self.field).clone(),
            alphas: self.alphas.iter().map(|x| x.coords().to_vec()).collect(),
            a: self.a.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraicCF {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CfJson::deserialize(d)?;
        let field = Arc::new(raw.field);
        let alphas = raw
            .alphas
            .into_iter()
            .map(|c| field.element(c))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        AlgebraicCF::new(field, alphas, raw.a).map_err(D::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryKind {
    Dirichlet,
    PalindromicNoncyclic,
    Cyclic,
}

impl fmt::Display for SymmetryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryKind::Dirichlet => "dirichlet",
            SymmetryKind::PalindromicNoncyclic => "palindromic-noncyclic",
            SymmetryKind::Cyclic => "cyclic",
        })
    }
}

/// How a unimodular `G` acts on the eigenlines: `G(l_i) = μ_i·l_{i+shift}`
/// (indices mod n), with `μ_{i+1} = σ(μ_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub shift: usize,
    pub mus: Vec<FieldElement>,
    pub kind: SymmetryKind,
    pub proper: bool,
    pub mu_product: Rational,
}

impl SymmetryReport {
    /// The permutation `i ↦ σ_G(i)` on `1..=n`.
    pub fn permutation(&self) -> Vec<usize> {
        let n = self.mus.len();
        (0..n).map(|i| (i + self.shift) % n + 1).collect()
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct ReportJson {
    shift: usize,
    #[serde(with = "rational::serde_rational_vecs")]
    mus: Vec<Vector>,
    kind: SymmetryKind,
    proper: bool,
    #[serde(with = "rational::serde_rational")]
    mu_product: Rational,
}

impl ReportJson {
    pub(crate) fn attach(self, field: &FieldRef) -> Result<SymmetryReport> {
        let mus = self
            .mus
            .into_iter()
            .map(|c| field.element(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymmetryReport {
            shift: self.shift,
            mus,
            kind: self.kind,
            proper: self.proper,
            mu_product: self.mu_product,
        })
    }
}

impl Serialize for SymmetryReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ReportJson {
            shift: self.shift,
            mus: self.mus.iter().map(|m| m.coords().to_vec()).collect(),
            kind: self.kind,
            proper: self.proper,
            mu_product: self.mu_product.clone(),
        }
        .serialize(s)
    }
}

impl SymmetryReport {
    /// Parses a report whose multipliers live in `field`.
    pub fn from_json(field: &FieldRef, json: &str) -> Result<Self> {
        let raw: ReportJson = serde_json::from_str(json).map_err(|e| Error::invalid(e.to_string()))?;
        raw.attach(field)
    }
}

fn check_operator(g: &ExactMatrix, n: usize) -> Result<()> {
    if g.rows() != n || g.cols() != n {
        return Err(Error::Dimension(format!("operator must be {n}x{n}")));
    }
    if !g.is_unimodular() {
        return Err(Error::invalid("operator must be an integer matrix with determinant ±1"));
    }
    Ok(())
}

/// Kind of the permutation `i ↦ i + shift` on `ℤ/n`.
pub fn classify_kind(shift: usize, n: usize) -> SymmetryKind {
    if shift.is_multiple_of(n) {
        SymmetryKind::Dirichlet
    } else if shift.gcd(&n) == 1 {
        SymmetryKind::Cyclic
    } else {
        SymmetryKind::PalindromicNoncyclic
    }
}

/// Tests whether `g` permutes the eigenlines of `cf`.
///
/// Returns `Ok(None)` when it does not. A single identity on `l₁` decides
/// everything, because `g` has rational entries and so commutes with σ.
pub fn is_symmetry(cf: &AlgebraicCF, g: &ExactMatrix) -> Result<Option<SymmetryReport>> {
    let n = cf.degree();
    check_operator(g, n)?;
    let w = cf.apply(g);
    let w0 = &w[0];
    if w0.is_zero() {
        return Ok(None);
    }
    for k in 0..n {
        let ok = (1..n).all(|r| w[r] == w0 * &cf.alphas[r].apply_sigma(k as i64));
        if ok {
            let mus: Vec<FieldElement> = (0..n as i64).map(|i| w0.apply_sigma(i)).collect();
            let mu_product = w0.norm();
            return Ok(Some(SymmetryReport {
                shift: k,
                mus,
                kind: classify_kind(k, n),
                proper: mu_product.is_one(),
                mu_product,
            }));
        }
    }
    Ok(None)
}

/// `Π μ_i = 1`.
pub fn properness(report: &SymmetryReport) -> bool {
    report.mu_product.is_one()
}

/// Properness together with the matrix cross-check `χ_G(x) = xⁿ − Π μ_i`,
/// which holds for every cyclic symmetry.
pub fn properness_checked(report: &SymmetryReport, g: &ExactMatrix) -> Result<bool> {
    if report.kind == SymmetryKind::Cyclic {
        let n = report.mus.len();
        let mut c = vec![num_bigint::BigInt::from(0); n + 1];
        c[n] = 1.into();
        if !rational::is_integer(&report.mu_product) {
            return Err(Error::verification("multiplier product is not an integer"));
        }
        c[0] = -report.mu_product.numer().clone();
        if g.charpoly()? != IntPolynomial::new(c) {
            return Err(Error::verification(format!(
                "charpoly {} disagrees with multiplier product {}",
                g.charpoly()?,
                rational::to_string(&report.mu_product)
            )));
        }
    }
    Ok(properness(report))
}

/// Primitive integer generator of `ker(G − I)`, first nonzero entry positive.
pub fn fixed_ray(g: &ExactMatrix) -> Result<Vector> {
    if !g.is_square() || !g.is_integer() {
        return Err(Error::invalid("fixed_ray needs a square integer matrix"));
    }
    let m = g - &ExactMatrix::identity(g.rows());
    let k = kernel_basis(&m, KernelMode::Integers);
    if k.len() != 1 {
        return Err(Error::precondition(format!(
            "eigenvalue 1 has a {}-dimensional eigenspace",
            k.len()
        )));
    }
    Ok(vector::primitive_normalized(&k[0]).expect("nonzero kernel vector"))
}

/// `(GAG⁻¹)·A = A·(GAG⁻¹)`: for hyperbolic `A`, exactly when `G` permutes
/// the eigenlines of `A`.
pub fn commutes_presymmetry(a: &ExactMatrix, g: &ExactMatrix) -> Result<bool> {
    check_operator(g, a.rows())?;
    let conj = &(g * a) * &g.inverse()?;
    Ok(&conj * a == a * &conj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::gaussian_period_field;

    fn golden_cf() -> AlgebraicCF {
        // ℓ = (1, σω/ω) over the p = 5 period field: the swap is a symmetry.
        let (k, w) = gaussian_period_field(5, 2).unwrap();
        let a1 = w.apply_sigma(1).checked_div(&w).unwrap();
        AlgebraicCF::new(k.clone(), vec![k.one(), a1], None).unwrap()
    }

    #[test]
    fn identity_is_dirichlet() {
        let cf = golden_cf();
        let r = is_symmetry(&cf, &ExactMatrix::identity(2)).unwrap().unwrap();
        assert_eq!(r.shift, 0);
        assert_eq!(r.kind, SymmetryKind::Dirichlet);
        assert!(r.mus.iter().all(FieldElement::is_one));
        assert!(r.proper);
    }

    #[test]
    fn swap_is_proper_cyclic() {
        let cf = golden_cf();
        let h = ExactMatrix::from_i64_rows(&[[0, 1], [1, 0]]);
        let r = is_symmetry(&cf, &h).unwrap().unwrap();
        assert_eq!(r.shift, 1);
        assert_eq!(r.kind, SymmetryKind::Cyclic);
        assert_eq!(r.mus[0], cf.alphas()[1]);
        assert!(properness_checked(&r, &h).unwrap());
        assert_eq!(r.permutation(), vec![2, 1]);
    }

    #[test]
    fn non_symmetry_and_bad_operator() {
        let cf = golden_cf();
        let g = ExactMatrix::from_i64_rows(&[[1, 1], [0, 1]]);
        assert_eq!(is_symmetry(&cf, &g).unwrap(), None);
        let bad = ExactMatrix::from_i64_rows(&[[2, 0], [0, 1]]);
        assert!(is_symmetry(&cf, &bad).is_err());
    }

    #[test]
    fn kinds() {
        assert_eq!(classify_kind(0, 4), SymmetryKind::Dirichlet);
        assert_eq!(classify_kind(1, 4), SymmetryKind::Cyclic);
        assert_eq!(classify_kind(3, 4), SymmetryKind::Cyclic);
        assert_eq!(classify_kind(2, 4), SymmetryKind::PalindromicNoncyclic);
        assert_eq!(classify_kind(2, 5), SymmetryKind::Cyclic);
    }

    #[test]
    fn fixed_rays() {
        let h = ExactMatrix::from_i64_rows(&[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]);
        assert_eq!(fixed_ray(&h).unwrap(), vector::from_i64(&[1, 1, 1, 1]));
        assert!(matches!(
            fixed_ray(&ExactMatrix::identity(4)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn presymmetry_filter() {
        let a = ExactMatrix::from_i64_rows(&[[2, 1], [1, 1]]);
        assert!(commutes_presymmetry(&a, &ExactMatrix::identity(2)).unwrap());
        assert!(commutes_presymmetry(&a, &a).unwrap());
        let g = ExactMatrix::from_i64_rows(&[[1, 1], [0, 1]]);
        assert!(!commutes_presymmetry(&a, &g).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let cf = golden_cf();
        let s = serde_json::to_string(&cf).unwrap();
        let back: AlgebraicCF = serde_json::from_str(&s).unwrap();
        assert_eq!(back, cf);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
        let h = ExactMatrix::from_i64_rows(&[[0, 1], [1, 0]]);
        let r = is_symmetry(&cf, &h).unwrap().unwrap();
        let rs = serde_json::to_string(&r).unwrap();
        assert_eq!(SymmetryReport::from_json(cf.field(), &rs).unwrap(), r);
    }
}
