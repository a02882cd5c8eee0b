//! Integer points on rational planes and inside parallelograms.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::hnf::{clear_row_denominators, hermite_form};
use super::matrix::ExactMatrix;
use super::rational::{self, frac, Rational};
use super::vector::{self, Vector};
use crate::error::{Error, Result};

/// `{ base + a·d1 + b·d2 : a, b ∈ ℤ }` inside ℚⁿ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineLattice2D {
    pub n: usize,
    #[serde(with = "rational::serde_rational_vec")]
    pub base: Vector,
    #[serde(with = "rational::serde_rational_vec")]
    pub d1: Vector,
    #[serde(with = "rational::serde_rational_vec")]
    pub d2: Vector,
}

impl AffineLattice2D {
    pub fn new(base: Vector, d1: Vector, d2: Vector) -> Result<Self> {
        let n = base.len();
        if d1.len() != n || d2.len() != n {
            return Err(Error::Dimension("lattice vectors of unequal length".into()));
        }
        let m = ExactMatrix::from_columns(&[d1.clone(), d2.clone()])?;
        if m.rank() != 2 {
            return Err(Error::Degenerate("lattice directions are dependent".into()));
        }
        Ok(Self { n, base, d1, d2 })
    }

    pub fn point(&self, a: &BigInt, b: &BigInt) -> Vector {
        let (a, b) = (rational::from_int(a.clone()), rational::from_int(b.clone()));
        vector::add(
            &self.base,
            &vector::add(&vector::scale(&self.d1, &a), &vector::scale(&self.d2, &b)),
        )
    }

    /// Rational `(a, b)` with `x = base + a·d1 + b·d2`, or `None` off the plane.
    pub fn coords(&self, x: &[Rational]) -> Option<(Rational, Rational)> {
        if x.len() != self.n {
            return None;
        }
        let m = ExactMatrix::from_columns(&[self.d1.clone(), self.d2.clone()]).ok()?;
        let c = m.solve(&vector::sub(x, &self.base))?;
        Some((c[0].clone(), c[1].clone()))
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.coords(x)
            .is_some_and(|(a, b)| rational::is_integer(&a) && rational::is_integer(&b))
    }

    /// The same point set translated by an integer matrix.
    pub fn map(&self, g: &ExactMatrix) -> Result<Self> {
        Self::new(g.mul_vec(&self.base), g.mul_vec(&self.d1), g.mul_vec(&self.d2))
    }
}

fn round_half_up(r: &Rational) -> BigInt {
    rational::floor(&(r + frac(1, 2)))
}

/// Lagrange–Gauss reduction of a rank-2 integer basis.
fn gauss_reduce(mut a: Vector, mut b: Vector) -> (Vector, Vector) {
    loop {
        if vector::dot(&a, &a) > vector::dot(&b, &b) {
            std::mem::swap(&mut a, &mut b);
        }
        let mu = round_half_up(&(vector::dot(&a, &b) / vector::dot(&a, &a)));
        if mu.is_zero() {
            return (a, b);
        }
        b = vector::sub(&b, &vector::scale(&a, &rational::from_int(mu)));
    }
}

/// All integer points of the plane `{x : e·x = c for each (e, c)}`.
///
/// The equations must cut out a 2-dimensional affine plane. Returns
/// `Ok(None)` when the plane is nonempty over ℚ but has no integer point.
pub fn integer_points_of_plane(equations: &[(Vector, Rational)]) -> Result<Option<AffineLattice2D>> {
    let Some((first, _)) = equations.first() else {
        return Err(Error::invalid("no equations"));
    };
    let n = first.len();
    if equations.iter().any(|(e, _)| e.len() != n) {
        return Err(Error::Dimension("equations of unequal length".into()));
    }
    let a = ExactMatrix::from_rows(equations.iter().map(|(e, _)| e.clone()).collect())?;
    let b: Vector = equations.iter().map(|(_, c)| c.clone()).collect();
    let Some(_) = a.solve(&b) else {
        return Err(Error::EmptyPlane);
    };
    let r = a.rank();
    if n - r != 2 {
        return Err(Error::Dimension(format!(
            "equations define a {}-dimensional affine space, not a plane",
            n - r
        )));
    }

    // Integer augmented system [A' | b'].
    let aug = ExactMatrix::from_rows(
        equations
            .iter()
            .map(|(e, c)| {
                let mut row = e.clone();
                row.push(c.clone());
                row
            })
            .collect(),
    )?;
    let ints = clear_row_denominators(&aug);
    let a_int: Vec<Vec<BigInt>> = ints.iter().map(|row| row[..n].to_vec()).collect();
    let b_int = vector::from_ints(&ints.iter().map(|row| row[n].clone()).collect::<Vec<_>>());

    // U·A'ᵀ = H, so A'·Uᵀ = Hᵀ and x = Uᵀy turns A'x = b' into Hᵀy = b'.
    let at = ExactMatrix::from_int_rows(&a_int)?.transpose();
    let (h, u) = hermite_form(&at)?;
    let hr = ExactMatrix::from_rows((0..r).map(|i| h.row(i)).collect())?.transpose();
    let y = hr.solve(&b_int).ok_or(Error::EmptyPlane)?;
    if !vector::is_integer(&y) {
        return Ok(None);
    }
    let base = (0..r).fold(vector::zero(n), |acc, i| {
        vector::add(&acc, &vector::scale(&u.row(i), &y[i]))
    });
    let (d1, d2) = gauss_reduce(u.row(r), u.row(r + 1));
    AffineLattice2D::new(base, d1, d2).map(Some)
}

/// Lattice points of `lat` in the closed parallelogram with vertices
/// `v[0], v[1], v[2], v[3]` (in cyclic order), sorted lexicographically by
/// lattice coordinates.
pub fn enumerate_lattice_points(lat: &AffineLattice2D, v: &[Vector; 4]) -> Result<Vec<Vector>> {
    Ok(lattice_points(lat, v)?.collect())
}

/// Lazy form of [`enumerate_lattice_points`], yielding points in the same order.
pub fn lattice_points<'a>(lat: &'a AffineLattice2D, v: &[Vector; 4]) -> Result<impl Iterator<Item = Vector> + 'a> {
    if vector::add(&v[0], &v[2]) != vector::add(&v[1], &v[3]) {
        return Err(Error::Degenerate("vertices do not form a parallelogram".into()));
    }
    let c = v
        .iter()
        .map(|p| lat.coords(p))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::invalid("parallelogram vertex off the lattice plane"))?;
    let e1 = (&c[1].0 - &c[0].0, &c[1].1 - &c[0].1);
    let e2 = (&c[3].0 - &c[0].0, &c[3].1 - &c[0].1);
    let area = &e1.0 * &e2.1 - &e1.1 * &e2.0;
    if area.is_zero() {
        return Err(Error::Degenerate("zero area".into()));
    }

    let min = |f: fn(&(Rational, Rational)) -> &Rational| c.iter().map(f).min().unwrap().clone();
    let max = |f: fn(&(Rational, Rational)) -> &Rational| c.iter().map(f).max().unwrap().clone();
    let (a_lo, a_hi) = (rational::ceil(&min(|p| &p.0)), rational::floor(&max(|p| &p.0)));
    let (b_min, b_max) = (min(|p| &p.1), max(|p| &p.1));
    let origin = c[0].clone();

    // For fixed a, each of 0 ≤ s ≤ 1 and 0 ≤ t ≤ 1 (Cramer's rule for
    // (x, y) = s·e1 + t·e2) cuts an interval of y = b − c₀.b.
    let row = move |a: BigInt| -> (BigInt, BigInt, BigInt) {
        let x = rational::from_int(a.clone()) - &origin.0;
        let constraints = [
            (-&e2.0 / &area, &x * &e2.1 / &area),
            (&e1.0 / &area, -(&x * &e1.1) / &area),
        ];
        let (mut lo, mut hi) = (&b_min - &origin.1, &b_max - &origin.1);
        for (k, c0) in &constraints {
            if k.is_zero() {
                if c0.is_negative() || *c0 > Rational::one() {
                    return (a, BigInt::one(), BigInt::zero());
                }
                continue;
            }
            let (y0, y1) = (-c0 / k, (Rational::one() - c0) / k);
            let (y0, y1) = if y0 <= y1 { (y0, y1) } else { (y1, y0) };
            lo = lo.max(y0);
            hi = hi.min(y1);
        }
        (
            a,
            rational::ceil(&(&lo + &origin.1)),
            rational::floor(&(&hi + &origin.1)),
        )
    };
    let rows = std::iter::successors(Some(a_lo), |a| Some(a + 1)).take_while(move |a| *a <= a_hi);
    Ok(rows.map(row).flat_map(move |(a, b_lo, b_hi)| {
        std::iter::successors(Some(b_lo), |b| Some(b + 1))
            .take_while(move |b| *b <= b_hi)
            .map({
                let a = a.clone();
                move |b| lat.point(&a, &b)
            })
    }))
}
