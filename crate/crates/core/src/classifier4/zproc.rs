//! The descent that turns an arbitrary orbit into a "short" one `z₁ … z₄`.
//!
//! Every orbit point `v ∈ Q` is written `v = p_Q + u` with `u ∈ L`. The
//! parallelogram `Δ^Q` spanned by the orbit (after projecting `R` onto `Q`
//! along `l`) is `p_Q + conv(u, Gu, −u, −Gu)`, and `Δ^R = G(Δ^Q)`, so a point
//! of `Δ^R` is the `G`-image of a point of `Δ^Q`: searching `Δ^Q` suffices.
//! In a `G`-invariant Euclidean norm on `L` the parallelogram is a square,
//! so every admissible point is strictly shorter than `u`; this is the
//! termination argument, and it is checked at every step.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::split::HyperplaneFrame;
use crate::error::{Error, Result};
use crate::exactmath::rational::{self, Rational};
use crate::exactmath::vector::{self, Vector};
use crate::exactmath::{lattice_points, ExactMatrix};

/// Default bound on descent steps.
pub const DEFAULT_MAX_ITER: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZQuadruple {
    #[serde(with = "rational::serde_rational_array")]
    pub z: [Vector; 4],
    #[serde(with = "rational::serde_rational_vec")]
    pub p: Vector,
    #[serde(with = "rational::serde_rational_vec")]
    pub p_q: Vector,
    #[serde(with = "rational::serde_rational_vec")]
    pub p_r: Vector,
    /// Descent steps taken after the starting orbit.
    pub iterations: usize,
}

impl ZQuadruple {
    /// Projection of `z_i` onto the plane `π` along `l`.
    pub fn projection_to_pi(&self, i: usize) -> Vector {
        let centre = if i.is_multiple_of(2) { &self.p_q } else { &self.p_r };
        vector::add(&self.p, &vector::sub(&self.z[i], centre))
    }
}

/// `Σ_k |G^k u|²`, a `G`-invariant positive definite quadratic form.
fn invariant_norm(g: &ExactMatrix, u: &[Rational]) -> Rational {
    let mut v = u.to_vec();
    let mut total = rational::rat(0);
    for _ in 0..4 {
        total += vector::dot(&v, &v);
        v = g.mul_vec(&v);
    }
    total
}

fn orbit(g: &ExactMatrix, v: &Vector) -> [Vector; 4] {
    let v1 = g.mul_vec(v);
    let v2 = g.mul_vec(&v1);
    let v3 = g.mul_vec(&v2);
    [v.clone(), v1, v2, v3]
}

fn round(r: &Rational) -> BigInt {
    rational::floor(&(r + rational::frac(1, 2)))
}

/// Lattice point of `Q` nearest to `p_Q` in the invariant norm, excluding
/// `p_Q` itself; ties go to the lexicographically smallest coordinates.
fn start_point(g: &ExactMatrix, frame: &HyperplaneFrame) -> Result<Vector> {
    let (a, b) = frame
        .q_lattice
        .coords(&frame.p_q)
        .ok_or_else(|| Error::verification("p_Q is off the plane Q"))?;
    let (a0, b0) = (round(&a), round(&b));
    let mut best: Option<(Rational, (BigInt, BigInt), Vector)> = None;
    for da in -1..=1 {
        for db in -1..=1 {
            let key = (&a0 + da, &b0 + db);
            let x = frame.q_lattice.point(&key.0, &key.1);
            if x == frame.p_q {
                continue;
            }
            let n = invariant_norm(g, &vector::sub(&x, &frame.p_q));
            if best.as_ref().is_none_or(|(bn, bk, _)| (&n, &key) < (bn, bk)) {
                best = Some((n, key, x));
            }
        }
    }
    Ok(best.expect("eight candidates remain").2)
}

pub fn z_procedure(g: &ExactMatrix, frame: &HyperplaneFrame) -> Result<ZQuadruple> {
    z_procedure_capped(g, frame, DEFAULT_MAX_ITER)
}

pub fn z_procedure_capped(g: &ExactMatrix, frame: &HyperplaneFrame, max_iter: usize) -> Result<ZQuadruple> {
    z_descent(g, frame, start_point(g, frame)?, max_iter)
}

/// Runs the descent from an arbitrary integer point `start ∈ Q \ l`.
pub fn z_descent(g: &ExactMatrix, frame: &HyperplaneFrame, start: Vector, max_iter: usize) -> Result<ZQuadruple> {
    if !frame.q_lattice.contains(&start) || start == frame.p_q {
        return Err(Error::invalid(
            "start point must be an integer point of Q off the line l",
        ));
    }
    let mut v = start;
    let mut iterations = 0;
    loop {
        let u = vector::sub(&v, &frame.p_q);
        let gu = g.mul_vec(&u);
        let vertices = [
            v.clone(),
            vector::add(&frame.p_q, &gu),
            vector::sub(&frame.p_q, &u),
            vector::sub(&frame.p_q, &gu),
        ];
        let next = lattice_points(&frame.q_lattice, &vertices)?.find(|x| *x != frame.p_q && !vertices.contains(x));
        let Some(next) = next else { break };
        if iterations == max_iter {
            return Err(Error::ResourceCap(format!(
                "descent did not finish within {max_iter} steps"
            )));
        }
        let old = invariant_norm(g, &u);
        let new = invariant_norm(g, &vector::sub(&next, &frame.p_q));
        if new >= old {
            return Err(Error::verification("descent step did not shorten the orbit"));
        }
        v = next;
        iterations += 1;
    }

    let z = orbit(g, &v);
    if g.mul_vec(&z[3]) != z[0] {
        return Err(Error::verification("orbit does not close after four steps"));
    }
    let quarter = rational::frac(1, 4);
    let p = vector::scale(&vector::sum(z.iter(), 4), &quarter);
    let half = rational::frac(1, 2);
    let zq = ZQuadruple {
        p_q: vector::scale(&vector::add(&z[0], &z[2]), &half),
        p_r: vector::scale(&vector::add(&z[1], &z[3]), &half),
        z,
        p,
        iterations,
    };
    if zq.p_q != frame.p_q || zq.p_r != frame.p_r || zq.p != frame.p {
        return Err(Error::verification("orbit centres disagree with the frame"));
    }
    Ok(zq)
}
