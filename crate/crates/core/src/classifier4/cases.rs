//! Case detection on a short orbit and the conjugator to a canonical `G_i`.

use serde::{Deserialize, Serialize};

use super::canonical::{canonical, source_tuple, target_frame};
use super::split::{hyperplane_frame, invariant_split};
use super::zproc::{z_procedure_capped, ZQuadruple};
use crate::error::{Error, Result};
use crate::exactmath::rational;
use crate::exactmath::vector::{self, Vector};
use crate::exactmath::ExactMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseCertificate {
    pub case: usize,
    /// Every case whose tuple is a basis of ℤ⁴; `case` is the smallest.
    pub matches: Vec<usize>,
    #[serde(with = "rational::serde_rational_array")]
    pub z: [Vector; 4],
    #[serde(with = "rational::serde_rational_array")]
    pub basis_tuple: [Vector; 4],
    #[serde(rename = "X")]
    pub x: ExactMatrix,
    #[serde(rename = "G_canonical")]
    pub g_canonical: ExactMatrix,
    pub iterations: usize,
}

fn is_basis(t: &[Vector; 4]) -> bool {
    t.iter().all(|v| vector::is_integer(v)) && ExactMatrix::from_columns(t).is_ok_and(|m| m.is_unimodular())
}

/// All cases `i` whose source tuple is a ℤ⁴-basis, in index order.
pub fn detect_case(zq: &ZQuadruple) -> Result<Vec<(usize, [Vector; 4])>> {
    let found: Vec<_> = (1..=7)
        .map(|i| (i, source_tuple(i, &zq.z)))
        .filter(|(_, t)| is_basis(t))
        .collect();
    if found.is_empty() {
        return Err(Error::verification("no case tuple is a basis of ℤ⁴"));
    }
    Ok(found)
}

/// `X = T·M⁻¹` sending the case-`i` tuple onto the case-`i` frame, checked
/// to be unimodular with `X·G·X⁻¹ = G_i`.
pub fn build_conjugator(i: usize, zq: &ZQuadruple, g: &ExactMatrix) -> Result<CaseCertificate> {
    if !(1..=7).contains(&i) {
        return Err(Error::invalid(format!("case index {i} outside 1..=7")));
    }
    let tuple = source_tuple(i, &zq.z);
    if !is_basis(&tuple) {
        return Err(Error::precondition(format!("case {i} tuple is not a basis of ℤ⁴")));
    }
    let m = ExactMatrix::from_columns(&tuple)?;
    let x = &target_frame(i) * &m.inverse()?;
    if !x.is_integer() || !x.is_unimodular() {
        return Err(Error::verification(format!("case {i} conjugator is not unimodular")));
    }
    let conj = &(&x * g) * &x.inverse()?;
    if &conj != canonical(i) {
        return Err(Error::verification(format!(
            "case {i} conjugator does not produce G{i}"
        )));
    }
    Ok(CaseCertificate {
        case: i,
        matches: vec![i],
        z: zq.z.clone(),
        basis_tuple: tuple,
        x,
        g_canonical: conj,
        iterations: zq.iterations,
    })
}

/// The whole pipeline: split, frame, descent, detection, conjugation.
pub fn classify(g: &ExactMatrix, max_iter: usize) -> Result<CaseCertificate> {
    let split = invariant_split(g)?;
    let frame = hyperplane_frame(g, &split)?;
    let zq = z_procedure_capped(g, &frame, max_iter)?;
    let matches = detect_case(&zq)?;
    let mut cert = build_conjugator(matches[0].0, &zq, g)?;
    cert.matches = matches.into_iter().map(|(i, _)| i).collect();
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier4::canonical::canonical_index;
    use crate::classifier4::zproc::DEFAULT_MAX_ITER;

    #[test]
    fn canonical_matrices_classify_to_themselves() {
        for i in 1..=7 {
            let cert = classify(canonical(i), DEFAULT_MAX_ITER).unwrap();
            assert_eq!(canonical_index(&cert.g_canonical), Some(cert.case));
            assert!(cert.matches.contains(&cert.case));
        }
    }

    #[test]
    fn conjugated_g2() {
        let x0 = ExactMatrix::from_i64_rows(&[[1, 1, 0, 0], [0, 1, 0, 0], [0, 2, 1, 0], [1, 0, -1, 1]]);
        let g = &(&x0 * canonical(2)) * &x0.inverse().unwrap();
        let cert = classify(&g, DEFAULT_MAX_ITER).unwrap();
        assert!(cert.matches.contains(&2));
        assert_eq!(&(&(&cert.x * &g) * &cert.x.inverse().unwrap()), canonical(cert.case));
    }

    #[test]
    fn non_integral_halves_are_filtered() {
        let z = [
            vector::from_i64(&[1, 0, 0, 0]),
            vector::from_i64(&[0, 1, 0, 0]),
            vector::from_i64(&[0, 0, 1, 0]),
            vector::from_i64(&[0, 0, 0, 1]),
        ];
        let zq = ZQuadruple {
            p: vector::zero(4),
            p_q: vector::zero(4),
            p_r: vector::zero(4),
            z,
            iterations: 0,
        };
        let found: Vec<usize> = detect_case(&zq).unwrap().into_iter().map(|(i, _)| i).collect();
        assert_eq!(found, [2]);
    }
}
