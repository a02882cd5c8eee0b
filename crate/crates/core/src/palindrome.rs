//! Explicit palindromic continued fractions in every dimension.
//!
//! For `p ≡ 1 (mod 2n)` the Gaussian period ω of degree `n` gives a normal
//! basis of a totally real cyclic field; the vector
//! `(1, σω/ω, …, σ^{n−1}ω/ω)` then has the cyclic shift `H` as a proper
//! cyclic symmetry.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cf_core::{self, AlgebraicCF, ReportJson, SymmetryKind, SymmetryReport};
use crate::error::{Error, Result};
use crate::exactmath::hnf::hermite_form;
use crate::exactmath::rational::{self, Rational};
use crate::exactmath::vector::{self, Vector};
use crate::exactmath::{kernel_basis, ExactMatrix, KernelMode};
use crate::numberfield::{gaussian_period_field, is_prime, roots, FieldElement, FieldRefExt};

/// Primes examined before `least_prime` gives up.
const PRIME_SEARCH_CAP: u64 = 1_000_000;

/// Smallest prime `p ≡ 1 (mod 2n)`.
pub fn least_prime(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::invalid("n must be at least 2"));
    }
    let step = 2 * n as u64;
    (1..=PRIME_SEARCH_CAP)
        .map(|k| k * step + 1)
        .find(|&p| is_prime(p))
        .ok_or_else(|| Error::ResourceCap(format!("no prime ≡ 1 mod {step} below the search cap")))
}

/// The `n×n` cyclic shift: ones on the superdiagonal and in the lower-left corner.
pub fn shift_matrix(n: usize) -> ExactMatrix {
    let mut h = ExactMatrix::zeros(n, n);
    for i in 0..n {
        h[(i, (i + 1) % n)] = Rational::one();
    }
    h
}

/// `α_j = Π_{k<j} σ^k(α₁)` for every `j` and `N(α₁) = 1`.
pub fn verify_class_cf(cf: &AlgebraicCF) -> bool {
    let alphas = cf.alphas();
    let Some(a1) = alphas.get(1) else { return false };
    if !a1.norm().is_one() {
        return false;
    }
    let mut prod = cf.field().one();
    for (j, aj) in alphas.iter().enumerate() {
        if *aj != prod {
            return false;
        }
        prod = &prod * &a1.apply_sigma(j as i64);
    }
    true
}

/// Everything needed to re-check a constructed palindromic fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalindromeCertificate {
    pub n: usize,
    pub p: u64,
    pub cf: AlgebraicCF,
    pub h: ExactMatrix,
    pub report: SymmetryReport,
    pub a: Option<ExactMatrix>,
}

impl PalindromeCertificate {
    /// Re-runs every check from scratch.
    pub fn verify(&self) -> Result<()> {
        let n = self.n;
        let fail = |m: &str| Err(Error::verification(m));
        if !is_prime(self.p) || !(self.p - 1).is_multiple_of(2 * n as u64) {
            return fail("p is not a prime ≡ 1 mod 2n");
        }
        if self.cf.degree() != n {
            return fail("field degree differs from n");
        }
        if self.h != shift_matrix(n) {
            return fail("H is not the cyclic shift");
        }
        if !verify_class_cf(&self.cf) {
            return fail("basis is not of the required product form");
        }
        let report =
            cf_core::is_symmetry(&self.cf, &self.h)?.ok_or_else(|| Error::verification("H is not a symmetry"))?;
        if report != self.report {
            return fail("stored report differs from the recomputed one");
        }
        if report.kind != SymmetryKind::Cyclic || report.shift != 1 || report.mus[0] != self.cf.alphas()[1] {
            return fail("H does not act as the full cycle with μ = α₁");
        }
        if !cf_core::properness_checked(&report, &self.h)? {
            return fail("H is not proper");
        }
        if self.a.as_ref() != self.cf.witness() {
            return fail("witness stored inconsistently");
        }
        if let Some(a) = &self.a {
            if !cf_core::commutes_presymmetry(a, &self.h)? {
                return fail("witness fails the presymmetry test");
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    n: usize,
    p: u64,
    cf: AlgebraicCF,
    #[serde(rename = "H")]
    h: ExactMatrix,
    report: serde_json::Value,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    a: Option<ExactMatrix>,
}

impl Serialize for PalindromeCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        CertificateJson {
            n: self.n,
            p: self.p,
            cf: self.cf.clone(),
            h: self.h.clone(),
            report: serde_json::to_value(&self.report).map_err(S::Error::custom)?,
            a: self.a.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PalindromeCertificate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CertificateJson::deserialize(d)?;
        let report: ReportJson = serde_json::from_value(raw.report).map_err(D::Error::custom)?;
        let report = report.attach(raw.cf.field()).map_err(D::Error::custom)?;
        Ok(Self {
            n: raw.n,
            p: raw.p,
            cf: raw.cf,
            h: raw.h,
            report,
            a: raw.a,
        })
    }
}

/// Builds and verifies the palindromic fraction of dimension `n − 1`.
///
/// With `witness_bound = Some(b)` a hyperbolic operator is also searched for
/// (best effort; the certificate is valid without one).
pub fn construct_palindromic(n: usize, witness_bound: Option<u32>) -> Result<PalindromeCertificate> {
    let p = least_prime(n)?;
    let (field, omega) = gaussian_period_field(p, n)?;
    let alphas = (0..n as i64)
        .map(|j| omega.apply_sigma(j).checked_div(&omega))
        .collect::<Result<Vec<_>>>()?;
    let mut cf = AlgebraicCF::new(field, alphas, None)?;
    if !cf.alphas()[1].norm().is_one() {
        return Err(Error::verification("N(α₁) ≠ 1"));
    }
    if !verify_class_cf(&cf) {
        return Err(Error::verification("constructed basis fails the product identities"));
    }
    let h = shift_matrix(n);
    let report = cf_core::is_symmetry(&cf, &h)?
        .ok_or_else(|| Error::verification("H is not a symmetry of the constructed fraction"))?;
    let a = match witness_bound {
        Some(b) => find_hyperbolic_a(&cf, b)?,
        None => None,
    };
    if let Some(a) = &a {
        cf = cf.with_witness(a.clone())?;
    }
    let cert = PalindromeCertificate { n, p, cf, h, report, a };
    cert.verify()?;
    Ok(cert)
}

/// `R[r·n + s][k]` = coordinate `s` of `α_k·α_r` in the basis `α`.
fn structure_constants(cf: &AlgebraicCF) -> Result<ExactMatrix> {
    let n = cf.degree();
    let basis = ExactMatrix::from_columns(&cf.alphas().iter().map(|a| a.coords().to_vec()).collect::<Vec<_>>())?;
    let to_alpha = basis.inverse()?;
    let mut r = ExactMatrix::zeros(n * n, n);
    for (ri, ar) in cf.alphas().iter().enumerate() {
        for (k, ak) in cf.alphas().iter().enumerate() {
            let c = to_alpha.mul_vec((ar * ak).coords());
            for (s, x) in c.into_iter().enumerate() {
                r[(ri * n + s, k)] = x;
            }
        }
    }
    Ok(r)
}

/// ℤ-basis, in `α`-coordinates, of the coefficient ring
/// `{ξ : ξ·M ⊆ M}` of `M = ℤ⟨1, α₁, …, α_{n−1}⟩`.
///
/// Since `1 ∈ M` the ring lies inside `M`, so `ξ = Σ y_k α_k` with `y`
/// integral, and the condition is `R·y ∈ ℤ^{n²}`.
pub fn coefficient_ring(cf: &AlgebraicCF) -> Result<Vec<Vector>> {
    let n = cf.degree();
    let r = structure_constants(cf)?;
    let d = r
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let m = n * n;
    // [d·R | −d·I] (y, z) = 0  ⇔  R y = z
    let mut sys = ExactMatrix::zeros(m, n + m);
    let dr = rational::from_int(d);
    for i in 0..m {
        for k in 0..n {
            sys[(i, k)] = &r[(i, k)] * &dr;
        }
        sys[(i, n + i)] = -dr.clone();
    }
    let ker = kernel_basis(&sys, KernelMode::Integers);
    let ys: Vec<Vector> = ker.iter().map(|v| v[..n].to_vec()).collect();
    let (h, _) = hermite_form(&ExactMatrix::from_rows(ys)?)?;
    let basis: Vec<Vector> = h.to_rows().into_iter().filter(|v| !vector::is_zero(v)).collect();
    if basis.len() != n {
        return Err(Error::verification("coefficient ring has the wrong rank"));
    }
    Ok(basis)
}

fn to_i128(m: &ExactMatrix) -> Option<Vec<Vec<i128>>> {
    use num_traits::ToPrimitive;
    m.to_int_rows()?
        .into_iter()
        .map(|r| r.iter().map(|x| x.to_i128()).collect())
        .collect()
}

/// Fraction-free (Bareiss) determinant; `None` on overflow.
fn det_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let p = (k + 1..n).find(|&i| a[i][k] != 0)?;
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j]
                    .checked_mul(a[k][k])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    Some(sign * a[n - 1][n - 1])
}

/// Sup-norm shells `‖c‖∞ = 1, 2, …, bound`, lexicographic inside a shell.
fn shells(n: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    (1..=bound).flat_map(move |r| {
        let side = (2 * r + 1) as u64;
        (0..side.pow(n as u32)).filter_map(move |mut code| {
            let mut c = vec![0i64; n];
            for slot in c.iter_mut().rev() {
                *slot = (code % side) as i64 - r;
                code /= side;
            }
            c.iter().any(|x| x.abs() == r).then_some(c)
        })
    })
}

/// Multiplication by `ξ` in the basis `α`: row `r` holds the coordinates of `ξ·α_r`.
fn multiplication_matrix(r: &ExactMatrix, y: &[Rational], n: usize) -> ExactMatrix {
    let mut a = ExactMatrix::zeros(n, n);
    for ri in 0..n {
        for s in 0..n {
            a[(ri, s)] = (0..n).fold(Rational::zero(), |acc, k| acc + &r[(ri * n + s, k)] * &y[k]);
        }
    }
    a
}

/// Searches units of the coefficient ring for a hyperbolic `A` with
/// `A·ℓ = ξ·ℓ`, scanning coefficient vectors with `‖c‖∞ ≤ bound` in shell
/// order. The first `det A = +1` hit wins; failing that, the first
/// `det A = −1` hit.
pub fn find_hyperbolic_a(cf: &AlgebraicCF, bound: u32) -> Result<Option<ExactMatrix>> {
    let n = cf.degree();
    let r = structure_constants(cf)?;
    let ring = coefficient_ring(cf)?;
    let gens: Vec<ExactMatrix> = ring.iter().map(|y| multiplication_matrix(&r, y, n)).collect();
    let gens_i128: Option<Vec<Vec<Vec<i128>>>> = gens.iter().map(to_i128).collect();
    let mut fallback = None;
    for c in shells(n, bound as i64) {
        let det = gens_i128.as_ref().and_then(|g| {
            let mut m = vec![vec![0i128; n]; n];
            for (ci, gi) in c.iter().zip(g) {
                for i in 0..n {
                    for j in 0..n {
                        m[i][j] = m[i][j].checked_add((*ci as i128).checked_mul(gi[i][j])?)?;
                    }
                }
            }
            det_i128(m)
        });
        let build = || {
            gens.iter().zip(&c).fold(ExactMatrix::zeros(n, n), |acc, (g, &ci)| {
                &acc + &g.scale(&rational::rat(ci))
            })
        };
        let (a, det) = match det {
            Some(d) if d.abs() != 1 => continue,
            Some(d) => (build(), d),
            None => {
                let a = build();
                let d = a.det()?;
                if !is_unit(&d) {
                    continue;
                }
                let sign = if d.is_one() { 1 } else { -1 };
                (a, sign)
            }
        };
        if det == -1 && fallback.is_some() {
            continue;
        }
        if !roots::has_distinct_real_roots(&a.charpoly()?) {
            continue;
        }
        if det == 1 {
            return Ok(Some(a));
        }
        fallback = Some(a);
    }
    Ok(fallback)
}

fn is_unit(d: &Rational) -> bool {
    rational::is_integer(d) && (d.is_one() || (-d).is_one())
}

/// The basis `(1, σω/ω, …, σ^{n−1}ω/ω)` for an arbitrary normal-basis `ω`.
pub fn normal_basis_fraction(omega: &FieldElement) -> Result<AlgebraicCF> {
    let n = omega.field().degree();
    let alphas = (0..n as i64)
        .map(|j| omega.apply_sigma(j).checked_div(omega))
        .collect::<Result<Vec<_>>>()?;
    AlgebraicCF::new(Arc::clone(omega.field()), alphas, None)
}
