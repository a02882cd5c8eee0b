//! Row Hermite normal form and integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::ExactMatrix;
use super::rational;
use super::vector::{self, Vector};
use crate::error::{Error, Result};

type IntRows = Vec<Vec<BigInt>>;

/// Coefficient field for [`kernel_basis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelMode {
    /// A ℚ-basis of `ker M`.
    Rationals,
    /// A ℤ-basis of `ker M ∩ ℤⁿ`.
    Integers,
}

fn identity_rows(n: usize) -> IntRows {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as u8)).collect())
        .collect()
}

/// `rows[dst] ← a·rows[dst] + b·rows[src]`, `rows[src] ← c·rows[dst] + d·rows[src]`
/// using the old values on the right-hand side.
fn combine(rows: &mut IntRows, dst: usize, src: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
    for k in 0..rows[dst].len() {
        let x = rows[dst][k].clone();
        let y = rows[src][k].clone();
        rows[dst][k] = a * &x + b * &y;
        rows[src][k] = c * &x + d * &y;
    }
}

fn hermite_rows(mut a: IntRows, cols: usize) -> (IntRows, IntRows) {
    let m = a.len();
    let mut u = identity_rows(m);
    let mut row = 0;
    for col in 0..cols {
        if row == m {
            break;
        }
        for i in row + 1..m {
            if a[i][col].is_zero() {
                continue;
            }
            let x = a[row][col].clone();
            let y = a[i][col].clone();
            let eg = x.extended_gcd(&y);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let (p, q) = (-(&y / &g), &x / &g);
            combine(&mut a, row, i, &s, &t, &p, &q);
            combine(&mut u, row, i, &s, &t, &p, &q);
        }
        if a[row][col].is_zero() {
            continue;
        }
        if a[row][col].is_negative() {
            for v in a[row].iter_mut().chain(u[row].iter_mut()) {
                *v = -&*v;
            }
        }
        let piv = a[row][col].clone();
        for i in 0..row {
            let q = a[i][col].div_floor(&piv);
            if q.is_zero() {
                continue;
            }
            for k in 0..cols {
                let v = &q * &a[row][k];
                a[i][k] -= v;
            }
            for k in 0..m {
                let v = &q * &u[row][k];
                u[i][k] -= v;
            }
        }
        row += 1;
    }
    (a, u)
}

/// Row Hermite normal form: returns `(H, U)` with `U·M = H`, `det U = ±1`.
///
/// Pivots are positive and entries above a pivot lie in `[0, pivot)`.
pub fn hermite_form(m: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix)> {
    let rows = m
        .to_int_rows()
        .ok_or_else(|| Error::invalid("hermite_form needs an integer matrix"))?;
    let (h, u) = hermite_rows(rows, m.cols());
    let h = if m.rows() == 0 {
        ExactMatrix::zeros(0, m.cols())
    } else {
        ExactMatrix::from_int_rows(&h)?
    };
    let u = ExactMatrix::from_int_rows(&u).unwrap_or_else(|_| ExactMatrix::zeros(0, 0));
    Ok((h, u))
}

/// Scales each row by the lcm of its denominators.
pub(crate) fn clear_row_denominators(m: &ExactMatrix) -> IntRows {
    m.to_rows()
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Basis of the right kernel of `m`.
///
/// In integer mode the result is a ℤ-basis of the saturated lattice
/// `ker M ∩ ℤⁿ`, brought to Hermite form so the output is canonical.
pub fn kernel_basis(m: &ExactMatrix, mode: KernelMode) -> Vec<Vector> {
    match mode {
        KernelMode::Rationals => m.kernel_rational(),
        KernelMode::Integers => {
            let n = m.cols();
            let ints = clear_row_denominators(m);
            // U·Mᵀ = H: the rows of U facing zero rows of H span ker M ∩ ℤⁿ.
            let mt: IntRows = (0..n).map(|j| ints.iter().map(|r| r[j].clone()).collect()).collect();
            let (h, u) = hermite_rows(mt, m.rows());
            let kernel: IntRows = h
                .iter()
                .zip(u)
                .filter(|(hr, _)| hr.iter().all(Zero::is_zero))
                .map(|(_, ur)| ur)
                .collect();
            if kernel.is_empty() {
                return Vec::new();
            }
            let (reduced, _) = hermite_rows(kernel, n);
            reduced
                .into_iter()
                .filter(|r| r.iter().any(|x| !x.is_zero()))
                .map(|r| vector::from_ints(&r))
                .collect()
        }
    }
}

/// Primitive integer covectors vanishing on every given vector.
pub fn annihilator(vectors: &[Vector], n: usize) -> Vec<Vector> {
    if vectors.is_empty() {
        return (0..n).map(|i| vector::unit(n, i)).collect();
    }
    let rows = ExactMatrix::from_rows(vectors.to_vec()).expect("equal-length vectors");
    kernel_basis(&rows, KernelMode::Integers)
}

/// True iff `h` equals the identity up to the sign of each row.
pub fn is_signed_identity(h: &ExactMatrix) -> bool {
    if !h.is_square() {
        return false;
    }
    let n = h.rows();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let x = &h[(i, j)];
            if i == j {
                rational::is_integer(x) && x.numer().abs().is_one()
            } else {
                x.is_zero()
            }
        })
    })
}
