mod common;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use palin_cf::cf_core::{commutes_presymmetry, fixed_ray, is_symmetry, properness_checked, AlgebraicCF, SymmetryKind};
use palin_cf::classifier4::{
    self, canonical, detect_case, hyperplane_frame, invariant_split, make_class_example, transport, z_descent,
    z_procedure, DEFAULT_MAX_ITER,
};
use palin_cf::exactmath::hnf::is_signed_identity;
use palin_cf::exactmath::rational::{self, frac, rat, Rational};
use palin_cf::exactmath::vector::Vector;
use palin_cf::exactmath::{
    enumerate_lattice_points, hermite_form, kernel_basis, vector, AffineLattice2D, ExactMatrix, KernelMode,
};
use palin_cf::numberfield::{isolate_roots, refine_sign, FieldElement, FieldRef, FieldRefExt};
use palin_cf::palindrome::{construct_palindromic, PalindromeCertificate};
use palin_cf::sail2d::{self, QuadraticSurd};

use common::*;

fn field17() -> &'static (FieldRef, FieldElement) {
    static CELL: OnceLock<(FieldRef, FieldElement)> = OnceLock::new();
    CELL.get_or_init(quartic)
}

fn int_matrix(rows: usize, cols: usize, r: i64) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(-r..=r, rows * cols)
        .prop_map(move |v| ExactMatrix::new(rows, cols, v.into_iter().map(rat).collect()).unwrap())
}

fn element(r: i64) -> impl Strategy<Value = FieldElement> {
    proptest::collection::vec(-r..=r, 4)
        .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
        .prop_map(|v| field17().0.element(v.into_iter().map(rat).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermite_form_is_a_unimodular_transform(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| int_matrix(r, c, 9))) {
        let (h, u) = hermite_form(&m).unwrap();
        prop_assert_eq!(&u * &m, h);
        prop_assert!(u.is_unimodular());
    }

    #[test]
    fn integer_kernel_has_the_right_rank(m in (1usize..4, 2usize..6).prop_flat_map(|(r, c)| int_matrix(r, c, 5))) {
        let k = kernel_basis(&m, KernelMode::Integers);
        prop_assert_eq!(k.len(), m.cols() - m.rank());
        for v in &k {
            prop_assert!(vector::is_integer(v));
            prop_assert!(vector::is_zero(&m.mul_vec(v)));
        }
    }

    #[test]
    fn cayley_hamilton(m in (1usize..6).prop_flat_map(|n| int_matrix(n, n, 6))) {
        let chi = m.charpoly().unwrap();
        prop_assert_eq!(chi.eval_matrix(&m), ExactMatrix::zeros(m.rows(), m.rows()));
    }

    #[test]
    fn unimodular_iff_hermite_form_is_signed_identity(m in (1usize..5).prop_flat_map(|n| int_matrix(n, n, 2))) {
        let (h, _) = hermite_form(&m).unwrap();
        prop_assert_eq!(m.is_unimodular(), is_signed_identity(&h));
    }

    #[test]
    fn trace_and_norm_are_sum_and_product_of_conjugates(a in element(6)) {
        let conj: Vec<FieldElement> = (0..4).map(|k| a.apply_sigma(k)).collect();
        let sum = conj.iter().skip(1).fold(conj[0].clone(), |acc, x| &acc + x);
        let prod = conj.iter().skip(1).fold(conj[0].clone(), |acc, x| &acc * x);
        let (t, n) = a.trace_and_norm();
        prop_assert_eq!(sum.as_rational(), Some(t));
        prop_assert_eq!(prod.as_rational(), Some(n));
    }

    #[test]
    fn field_inverse_and_minpoly(a in element(5)) {
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).is_one());
        let f = a.minpoly();
        let value = f.coeffs().iter().rev().fold(field17().0.zero(), |acc, c| {
            &(&acc * &a) + &field17().0.from_rational(rational::from_int(c.clone()))
        });
        prop_assert!(value.is_zero());
    }

    #[test]
    fn sign_of_rationals_is_exact(c in -50i64..50, i in 0usize..4) {
        prop_assume!(c != 0);
        let iso = isolate_roots(field17().0.minpoly()).unwrap();
        prop_assert_eq!(refine_sign(&iso, i, &[rat(c)]).unwrap(), if c > 0 { 1 } else { -1 });
    }

    #[test]
    fn quotient_of_conjugates_has_norm_one(a in element(4)) {
        let q = a.apply_sigma(1).checked_div(&a).unwrap();
        prop_assert!(q.norm().is_one());
    }
}

/// Symmetry reports for random cyclic symmetries built from multipliers.
fn multiplier_case(seed: u64) -> (AlgebraicCF, ExactMatrix) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (k, _) = field17();
    loop {
        let xi = random_element(&mut rng, k, 3);
        let mut mu = xi.apply_sigma(1).checked_div(&xi).unwrap();
        if seed % 2 == 1 {
            // θ − 2 has norm −1.
            mu = &mu * &(&k.theta() - &k.from_i64(2));
        }
        if let Some((cf, g)) = multiplier_instance(&mu) {
            let x = random_unimodular(&mut rng, 4, 2);
            return (transport(&cf, &x).unwrap(), conjugate(&x, &g));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reports_are_galois_coherent(seed in 0u64..1000) {
        let (cf, g) = multiplier_case(seed);
        let r = is_symmetry(&cf, &g).unwrap().expect("built as a symmetry");
        prop_assert_eq!(r.kind, SymmetryKind::Cyclic);
        for i in 0..4 {
            prop_assert_eq!(&r.mus[(i + 1) % 4], &r.mus[i].apply_sigma(1));
        }
        prop_assert_eq!(&r.mu_product, &r.mus[0].norm());
        prop_assert_eq!(properness_checked(&r, &g).unwrap(), seed % 2 == 0);
        prop_assert_eq!(g.pow(4).is_identity(), r.proper);
    }

    #[test]
    fn proper_symmetries_fix_an_interior_ray(seed in (0u64..500).prop_map(|s| 2 * s)) {
        let (cf, g) = multiplier_case(seed);
        let r = is_symmetry(&cf, &g).unwrap().unwrap();
        prop_assert!(r.proper);
        let ray = fixed_ray(&g).unwrap();
        for e in 0..4 {
            prop_assert!(cf.cone_signs(&ray, e).unwrap().iter().all(|&s| s != 0));
        }
    }
}

#[test]
fn symmetries_commute_with_the_witness() {
    for n in 2..=4 {
        let cert = construct_palindromic(n, Some(4)).unwrap();
        let a = cert.a.as_ref().expect("witness found for n ≤ 4");
        assert!(commutes_presymmetry(a, &cert.h).unwrap());
        assert!(commutes_presymmetry(a, &cert.h.pow(2)).unwrap());
    }
}

#[test]
fn certificates_survive_serialization() {
    for n in 2..=5 {
        let cert = construct_palindromic(n, Some(3)).unwrap();
        let text = serde_json::to_string(&cert).unwrap();
        let back: PalindromeCertificate = serde_json::from_str(&text).unwrap();
        back.verify().unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
        // μ₁ is α₁ for the shift matrix.
        assert_eq!(back.report.mus[0], back.cf.alphas()[1]);
    }
}

fn class_and_conjugator() -> impl Strategy<Value = (usize, u64)> {
    (1usize..=7, any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn classification_round_trip((i, seed) in class_and_conjugator()) {
        let (k, omega) = field17();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x0 = random_unimodular(&mut rng, 4, 3);
        let cf = transport(&make_class_example(i, k, omega).unwrap(), &x0).unwrap();
        let g = conjugate(&x0, canonical(i));

        let split = invariant_split(&g).unwrap();
        let frame = hyperplane_frame(&g, &split).unwrap();
        let zq = z_procedure(&g, &frame).unwrap();
        for j in 0..4 {
            prop_assert_eq!(g.mul_vec(&zq.z[j]), zq.z[(j + 1) % 4].clone());
        }
        // p_Q lies on l, at the level of Q, and G(p_Q) = p_R.
        prop_assert_eq!(vector::dot(&frame.f, &zq.p_q), rat(1));
        prop_assert_eq!(vector::dot(&frame.g, &zq.p_q), frame.q_level.clone());
        let along = vector::sub(&zq.p_q, &frame.p);
        prop_assert_eq!(ExactMatrix::from_columns(&[along, frame.direction.clone()]).unwrap().rank(), 1);
        prop_assert_eq!(g.mul_vec(&zq.p_q), zq.p_r.clone());

        let cert = classifier4::classify(&g, DEFAULT_MAX_ITER).unwrap();
        prop_assert_eq!(&conjugate(&cert.x, &g), canonical(cert.case));
        prop_assert_eq!(cert.case, i);
        let normalized = transport(&cf, &cert.x).unwrap();
        prop_assert!(classifier4::verify_class_membership(&normalized, cert.case).unwrap());
        prop_assert_eq!(normalized.alphas()[1].trace(), rat(classifier4::CLASS_TRACES[cert.case - 1]));
    }

    #[test]
    fn split_is_covariant((i, seed) in class_and_conjugator()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_unimodular(&mut rng, 4, 3);
        let s0 = invariant_split(canonical(i)).unwrap();
        let s1 = invariant_split(&conjugate(&x, canonical(i))).unwrap();
        let same_span = |a: &[Vec<Rational>], b: &[Vec<Rational>]| {
            let mut all = a.to_vec();
            all.extend_from_slice(b);
            ExactMatrix::from_rows(all).unwrap().rank() == a.len()
        };
        prop_assert!(same_span(&[x.mul_vec(&s0.l_plus)], std::slice::from_ref(&s1.l_plus)));
        prop_assert!(same_span(&[x.mul_vec(&s0.l_minus)], std::slice::from_ref(&s1.l_minus)));
        let moved: Vec<_> = s0.plane.iter().map(|v| x.mul_vec(v)).collect();
        prop_assert!(same_span(&moved, &s1.plane));
        prop_assert!(same_span(&s1.plane, &moved));
    }

    #[test]
    fn descent_from_any_start_finds_a_case((i, seed) in class_and_conjugator(), a in -25i64..25, b in -25i64..25) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = conjugate(&random_unimodular(&mut rng, 4, 2), canonical(i));
        let frame = hyperplane_frame(&g, &invariant_split(&g).unwrap()).unwrap();
        let start = frame.q_lattice.point(&BigInt::from(a), &BigInt::from(b));
        prop_assume!(start != frame.p_q);
        let zq = z_descent(&g, &frame, start, DEFAULT_MAX_ITER).unwrap();
        let cases = detect_case(&zq).unwrap();
        prop_assert!(!cases.is_empty());
        let cert = classifier4::build_conjugator(cases[0].0, &zq, &g).unwrap();
        prop_assert_eq!(cert.case, i);
    }
}

fn canonical_surd() -> impl Strategy<Value = QuadraticSurd> {
    (-30i64..30, 2i64..=200, -30i64..30).prop_filter_map("canonical surd", |(p, d, q)| QuadraticSurd::new(p, d, q).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn convergents_bracket_the_surd(s in canonical_surd()) {
        let cf = sail2d::expand(&s);
        let k = cf.preperiod.len() + 3 * cf.period.len();
        let conv = cf.convergents(k.max(2));
        for (j, c) in conv.iter().enumerate().skip(1) {
            // |x − p_j/q_j| < 1/q_j²
            let q = Rational::from_integer(c.denom().clone());
            let eps = Rational::one() / (&q * &q);
            prop_assert_eq!(s.cmp_rational(&(c - &eps)), std::cmp::Ordering::Greater, "convergent {}", j);
            prop_assert_eq!(s.cmp_rational(&(c + &eps)), std::cmp::Ordering::Less, "convergent {}", j);
        }
    }

    #[test]
    fn periods_are_minimal_and_eventually_positive(s in canonical_surd()) {
        let cf = sail2d::expand(&s);
        prop_assert_eq!(sail2d::primitive_period_len(&cf.period), cf.period.len());
        prop_assert!(cf.preperiod.iter().skip(1).chain(&cf.period).all(|a| a.is_positive()));
    }

    #[test]
    fn trace_zero_or_one_forces_palindromes(p in -40i64..40, d in 2i64..=200, q in -40i64..40) {
        let Ok(s) = QuadraticSurd::new(p, d, q) else { return Ok(()) };
        let r = sail2d::check_trace_criterion(&s);
        if r.trace_in_01 {
            prop_assert!(r.palindromic);
        }
    }
}

#[test]
fn half_coordinates_keep_exactness() {
    // ½-steps in the classifier tables survive a JSON round trip unchanged.
    let z = [0, 1, 2, 3].map(|k| vector::unit(4, k));
    let t = classifier4::source_tuple(7, &z);
    assert_eq!(t[3], vec![frac(3, 4), frac(1, 4), frac(-1, 4), frac(1, 4)]);
    assert!(t[3].iter().all(|x| !x.is_zero()));
    assert!(BigInt::from(1).is_one());
}

fn parallelogram() -> impl Strategy<Value = (AffineLattice2D, [Vector; 4])> {
    let ints = proptest::collection::vec(-4i64..=4, 12);
    let coords = proptest::collection::vec((-6i64..=6, 1i64..=4), 6);
    (ints, coords).prop_filter_map("nondegenerate", |(v, c)| {
        let lat = AffineLattice2D::new(
            vector::from_i64(&v[0..4]),
            vector::from_i64(&v[4..8]),
            vector::from_i64(&v[8..12]),
        )
        .ok()?;
        let q: Vec<Rational> = c.iter().map(|&(p, d)| frac(p, d)).collect();
        let at = |a: &Rational, b: &Rational| {
            vector::add(
                &lat.base,
                &vector::add(&vector::scale(&lat.d1, a), &vector::scale(&lat.d2, b)),
            )
        };
        let v0 = at(&q[0], &q[1]);
        let e1 = vector::sub(&at(&q[2], &q[3]), &lat.base);
        let e2 = vector::sub(&at(&q[4], &q[5]), &lat.base);
        if ExactMatrix::from_columns(&[e1.clone(), e2.clone()]).unwrap().rank() != 2 {
            return None;
        }
        let v = [
            v0.clone(),
            vector::add(&v0, &e1),
            vector::add(&vector::add(&v0, &e1), &e2),
            vector::add(&v0, &e2),
        ];
        Some((lat, v))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parallelogram_enumeration_matches_brute_force((lat, v) in parallelogram()) {
        let found = enumerate_lattice_points(&lat, &v).unwrap();
        let sides = ExactMatrix::from_columns(&[vector::sub(&v[1], &v[0]), vector::sub(&v[3], &v[0])]).unwrap();
        let unit = |r: &Rational| !r.is_negative() && *r <= Rational::one();
        let mut brute = Vec::new();
        for a in -20i64..=20 {
            for b in -20i64..=20 {
                let x = lat.point(&BigInt::from(a), &BigInt::from(b));
                if let Some(st) = sides.solve(&vector::sub(&x, &v[0])) {
                    if unit(&st[0]) && unit(&st[1]) {
                        brute.push(x);
                    }
                }
            }
        }
        prop_assert_eq!(found, brute);
    }
}
