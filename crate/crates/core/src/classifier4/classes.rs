//! The seven classes of quartic fractions `ℓ = (1, α, β, γ)` with a proper
//! cyclic symmetry, described by field identities.

use super::canonical::{canonical, CLASS_TRACES};
use crate::cf_core::{is_symmetry, AlgebraicCF, SymmetryKind};
use crate::error::{Error, Result};
use crate::exactmath::rational::{frac, rat};
use crate::exactmath::ExactMatrix;
use crate::numberfield::{FieldElement, FieldRef, FieldRefExt};

fn check_index(i: usize) -> Result<()> {
    if (1..=7).contains(&i) {
        Ok(())
    } else {
        Err(Error::invalid(format!("class index {i} outside 1..=7")))
    }
}

/// γ prescribed by class `i` for the generator `σ^s`.
fn gamma_for(i: usize, alpha: &FieldElement, s: i64) -> FieldElement {
    let a2 = alpha.apply_sigma(2 * s);
    match i {
        1..=3 => a2,
        4 | 5 => (alpha + &a2).scale(&frac(1, 2)),
        _ => (&(alpha + &a2) + &alpha.field().one()).scale(&frac(1, 2)),
    }
}

/// The defining identities of class `i` for the given generator `σ^s`.
fn identities_hold(cf: &AlgebraicCF, i: usize, s: i64) -> bool {
    let [_, alpha, beta, gamma] = cf.alphas() else {
        return false;
    };
    alpha.trace() == rat(CLASS_TRACES[i - 1]) && *beta == alpha.apply_sigma(s) && *gamma == gamma_for(i, alpha, s)
}

/// True iff `G_i` is a proper cyclic symmetry of `cf`.
pub fn has_proper_cyclic_symmetry(cf: &AlgebraicCF, g: &ExactMatrix) -> Result<bool> {
    Ok(is_symmetry(cf, g)?.is_some_and(|r| r.kind == SymmetryKind::Cyclic && r.proper))
}

/// Whether `cf` satisfies the identities of class `i` for σ or σ⁻¹ (either
/// generator of the Galois group may play the role of σ).
///
/// The answer is cross-checked against the symmetry test with `G_i`; a
/// disagreement is reported as a verification error.
pub fn verify_class_membership(cf: &AlgebraicCF, i: usize) -> Result<bool> {
    check_index(i)?;
    if cf.degree() != 4 {
        return Err(Error::invalid("class membership is defined for quartic fields"));
    }
    let by_identities = identities_hold(cf, i, 1) || identities_hold(cf, i, -1);
    let by_symmetry = has_proper_cyclic_symmetry(cf, canonical(i))?;
    if by_identities != by_symmetry {
        return Err(Error::verification(format!(
            "class {i}: identities say {by_identities}, symmetry test says {by_symmetry}"
        )));
    }
    Ok(by_identities)
}

/// A member of class `i` built from a normal-basis element ω:
/// `α = ω − (Tr ω − t_i)/4`, `β = σα` and γ as the class prescribes.
pub fn make_class_example(i: usize, field: &FieldRef, omega: &FieldElement) -> Result<AlgebraicCF> {
    check_index(i)?;
    if field.degree() != 4 {
        return Err(Error::invalid("class examples need a quartic field"));
    }
    let shift = (omega.trace() - rat(CLASS_TRACES[i - 1])) * frac(1, 4);
    let alpha = omega - &field.from_rational(shift);
    let beta = alpha.apply_sigma(1);
    let gamma = gamma_for(i, &alpha, 1);
    let cf = AlgebraicCF::new(field.clone(), vec![field.one(), alpha, beta, gamma], None)?;
    if !verify_class_membership(&cf, i)? {
        return Err(Error::verification(format!(
            "class {i} example fails its own identities"
        )));
    }
    Ok(cf)
}

/// The fraction `X·ℓ`, rescaled so its first entry is 1. If `G` is a
/// symmetry of `cf` then `X·G·X⁻¹` is a symmetry of the result.
pub fn transport(cf: &AlgebraicCF, x: &ExactMatrix) -> Result<AlgebraicCF> {
    if !x.is_integer() || !x.is_unimodular() || x.rows() != cf.degree() {
        return Err(Error::invalid("transport needs a unimodular matrix of matching size"));
    }
    let image = cf.apply(x);
    let inv = image[0].inverse()?;
    let alphas = image.iter().map(|y| y * &inv).collect();
    AlgebraicCF::new(cf.field().clone(), alphas, None)
}
