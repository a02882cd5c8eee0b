#![allow(dead_code)]

use palin_cf::cf_core::AlgebraicCF;
use palin_cf::exactmath::rational::rat;
use palin_cf::exactmath::ExactMatrix;
use palin_cf::numberfield::{gaussian_period_field, FieldElement, FieldRef, FieldRefExt};
use rand::Rng;

pub fn quartic() -> (FieldRef, FieldElement) {
    gaussian_period_field(17, 4).unwrap()
}

/// Uniform rejection sampling of a unimodular matrix with entries in `[−r, r]`.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, r: i64) -> ExactMatrix {
    loop {
        let rows: Vec<Vec<_>> = (0..n)
            .map(|_| (0..n).map(|_| rat(rng.gen_range(-r..=r))).collect())
            .collect();
        let m = ExactMatrix::from_rows(rows).unwrap();
        if m.is_unimodular() {
            return m;
        }
    }
}

pub fn random_int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, r: i64) -> ExactMatrix {
    let data = (0..rows * cols).map(|_| rat(rng.gen_range(-r..=r))).collect();
    ExactMatrix::new(rows, cols, data).unwrap()
}

pub fn random_element<R: Rng>(rng: &mut R, k: &FieldRef, r: i64) -> FieldElement {
    loop {
        let coords = (0..k.degree()).map(|_| rat(rng.gen_range(-r..=r))).collect();
        let x = k.element(coords).unwrap();
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn conjugate(x: &ExactMatrix, g: &ExactMatrix) -> ExactMatrix {
    &(x * g) * &x.inverse().unwrap()
}

/// `ℓ = (1, μ, μ·σμ, μ·σμ·σ²μ)` together with the shift matrix whose corner
/// is `N(μ)`; that matrix is a cyclic symmetry of ℓ with multiplier μ.
pub fn multiplier_instance(mu: &FieldElement) -> Option<(AlgebraicCF, ExactMatrix)> {
    let k = mu.field().clone();
    let n = k.degree();
    let mut alphas = vec![k.one()];
    for j in 1..n {
        let next = &alphas[j - 1] * &mu.apply_sigma(j as i64 - 1);
        alphas.push(next);
    }
    let cf = AlgebraicCF::new(k, alphas, None).ok()?;
    let mut g = ExactMatrix::zeros(n, n);
    for r in 0..n - 1 {
        g[(r, r + 1)] = rat(1);
    }
    g[(n - 1, 0)] = mu.norm();
    Some((cf, g))
}
