//! Rational invariant subspaces of an order-4 operator and the affine frame
//! (hyperplane `S₁`, point `p`, planes `Q` and `R`) built from them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::hnf::annihilator;
use crate::exactmath::rational::{self, Rational};
use crate::exactmath::vector::{self, Vector};
use crate::exactmath::{hermite_form, integer_points_of_plane, kernel_basis, AffineLattice2D};
use crate::exactmath::{ExactMatrix, KernelMode};

/// `ℚ⁴ = l₊ ⊕ l₋ ⊕ L` for `G` with eigenvalues `1, −1, ±i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantSplit {
    #[serde(with = "rational::serde_rational_vec")]
    pub l_plus: Vector,
    #[serde(with = "rational::serde_rational_vec")]
    pub l_minus: Vector,
    #[serde(rename = "L", with = "rational::serde_rational_vecs")]
    pub plane: Vec<Vector>,
}

pub(crate) fn check_gl4(g: &ExactMatrix) -> Result<()> {
    if g.rows() != 4 || g.cols() != 4 {
        return Err(Error::Dimension(format!(
            "expected a 4×4 matrix, got {}×{}",
            g.rows(),
            g.cols()
        )));
    }
    if !g.is_integer() || !g.is_unimodular() {
        return Err(Error::invalid("matrix is not in GL₄(ℤ)"));
    }
    Ok(())
}

pub fn invariant_split(g: &ExactMatrix) -> Result<InvariantSplit> {
    check_gl4(g)?;
    let id = ExactMatrix::identity(4);
    let g2 = g.pow(2);
    if !g2.pow(2).is_identity() || g2.is_identity() {
        return Err(Error::precondition("not order 4"));
    }
    let ker = |m: &ExactMatrix| kernel_basis(m, KernelMode::Integers);
    let plus = ker(&(g - &id));
    let minus = ker(&(g + &id));
    let plane = ker(&(&g2 + &id));
    if plus.len() != 1 || minus.len() != 1 || plane.len() != 2 {
        return Err(Error::precondition(format!(
            "wrong eigenstructure: eigenspace dimensions ({}, {}, {}) instead of (1, 1, 2)",
            plus.len(),
            minus.len(),
            plane.len()
        )));
    }
    let norm = |v: &Vector| vector::primitive_normalized(v).expect("kernel vectors are nonzero");
    Ok(InvariantSplit {
        l_plus: norm(&plus[0]),
        l_minus: norm(&minus[0]),
        plane,
    })
}

/// The affine scaffolding around the fixed line of `G`.
///
/// `S₁ = {f = 1}` is the nearest rational hyperplane parallel to
/// `S = l₋ + L`; `p = S₁ ∩ l₊`. Inside `S₁`, the planes parallel to
/// `π = p + L` are the level sets of `g`, and `Q = {g = q}`, `R = {g = −q}`
/// are the nearest ones carrying integer points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperplaneFrame {
    #[serde(with = "rational::serde_rational_vec")]
    pub f: Vector,
    #[serde(with = "rational::serde_rational_vec")]
    pub p: Vector,
    #[serde(with = "rational::serde_rational_vec")]
    pub g: Vector,
    /// Direction of the line `l` through `p` (equal to `l₋`).
    #[serde(with = "rational::serde_rational_vec")]
    pub direction: Vector,
    #[serde(with = "rational::serde_rational")]
    pub q_level: Rational,
    #[serde(with = "rational::serde_rational")]
    pub r_level: Rational,
    pub q_lattice: AffineLattice2D,
    pub r_lattice: AffineLattice2D,
    #[serde(with = "rational::serde_rational_vec")]
    pub p_q: Vector,
    #[serde(with = "rational::serde_rational_vec")]
    pub p_r: Vector,
}

fn single(mut v: Vec<Vector>, what: &str) -> Result<Vector> {
    if v.len() != 1 {
        return Err(Error::verification(format!(
            "{what}: expected one covector, got {}",
            v.len()
        )));
    }
    Ok(v.remove(0))
}

pub fn hyperplane_frame(g: &ExactMatrix, split: &InvariantSplit) -> Result<HyperplaneFrame> {
    let mut s_basis = split.plane.clone();
    s_basis.push(split.l_minus.clone());
    let mut f = single(annihilator(&s_basis, 4), "covector of S")?;
    if vector::dot(&f, &split.l_plus).is_negative() {
        f = vector::scale(&f, &rational::rat(-1));
    }
    let p = vector::scale(&split.l_plus, &(rational::rat(1) / vector::dot(&f, &split.l_plus)));

    let mut l_basis = split.plane.clone();
    l_basis.push(split.l_plus.clone());
    let mut gc = single(annihilator(&l_basis, 4), "covector of L + l₊")?;
    if vector::dot(&gc, &split.l_minus).is_negative() {
        gc = vector::scale(&gc, &rational::rat(-1));
    }

    // S₁ ∩ ℤ⁴ = x₀ + (S ∩ ℤ⁴); U·fᵀ = (1,0,0,0)ᵀ gives x₀ = U₀ and S ∩ ℤ⁴ = ⟨U₁, U₂, U₃⟩.
    let (_, u) = hermite_form(&ExactMatrix::from_rows(vec![f.clone()])?.transpose())?;
    let x0 = u.row(0);
    if vector::dot(&f, &x0) != rational::rat(1) {
        return Err(Error::verification("covector of S is not primitive"));
    }
    let int = |r: Rational| -> BigInt { r.to_integer() };
    let m = (1..4).fold(BigInt::zero(), |acc, i| acc.gcd(&int(vector::dot(&gc, &u.row(i)))));
    let c = int(vector::dot(&gc, &x0)).mod_floor(&m);
    // g ∘ G = −g makes the achievable levels c + mℤ symmetric about 0 = g(p).
    let q = if c.is_zero() {
        m
    } else if &c * 2 == m {
        c
    } else {
        return Err(Error::verification("levels of g on S₁ are not symmetric"));
    };
    let q_level = rational::from_int(q);
    let r_level = -&q_level;

    let lattice = |level: &Rational| -> Result<AffineLattice2D> {
        integer_points_of_plane(&[(f.clone(), rational::rat(1)), (gc.clone(), level.clone())])?
            .ok_or_else(|| Error::verification("achievable level carries no integer points"))
    };
    let q_lattice = lattice(&q_level)?;
    let r_lattice = lattice(&r_level)?;
    let step = &q_level / vector::dot(&gc, &split.l_minus);
    let p_q = vector::add(&p, &vector::scale(&split.l_minus, &step));
    let p_r = vector::sub(&p, &vector::scale(&split.l_minus, &step));
    if g.mul_vec(&p_q) != p_r {
        return Err(Error::verification("G does not map Q onto R"));
    }
    Ok(HyperplaneFrame {
        f,
        p,
        g: gc,
        direction: split.l_minus.clone(),
        q_level,
        r_level,
        q_lattice,
        r_lattice,
        p_q,
        p_r,
    })
}
