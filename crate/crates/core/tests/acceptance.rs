//! End-to-end acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use palin_cf::cf_core::{is_symmetry, properness_checked, AlgebraicCF, SymmetryKind};
use palin_cf::classifier4::{
    canonical, classify, invariant_split, make_class_example, transport, verify_class_membership, CLASS_TRACES,
    DEFAULT_MAX_ITER,
};
use palin_cf::exactmath::rational::{frac, rat, Rational};
use palin_cf::exactmath::{enumerate_lattice_points, kernel_basis, vector, AffineLattice2D, ExactMatrix, KernelMode};
use palin_cf::numberfield::{FieldElement, FieldRefExt};
use palin_cf::palindrome::construct_palindromic;
use palin_cf::sail2d::{self, QuadraticSurd};

use common::*;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn is_full_cycle(perm: &[usize]) -> bool {
    let mut at = 0;
    for step in 1..=perm.len() {
        at = perm[at] - 1;
        if at == 0 {
            return step == perm.len();
        }
    }
    false
}

fn existence() -> Outcome {
    for (n, p) in [(2, 5), (3, 7), (4, 17), (5, 11)] {
        let start = Instant::now();
        let cert = construct_palindromic(n, Some(4)).map_err(err)?;
        cert.verify().map_err(err)?;
        let elapsed = start.elapsed();
        ensure!(cert.p == p, "n = {n}: p = {} instead of {p}", cert.p);
        ensure!(cert.cf.alphas()[1].norm().is_one(), "n = {n}: N(α₁) ≠ 1");
        ensure!(
            is_full_cycle(&cert.report.permutation()),
            "n = {n}: σ_H is not an n-cycle"
        );
        ensure!(cert.report.mu_product.is_one(), "n = {n}: μ-product ≠ 1");
        ensure!(elapsed < Duration::from_secs(60), "n = {n} took {elapsed:?}");
    }
    Ok("n = 2..5 over p = 5, 7, 17, 11".into())
}

const TRANSCRIBED: [[[i64; 4]; 4]; 7] = [
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, -1, -1, -1]],
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, -1, -1, -1]],
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [2, -1, -1, -1]],
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 2], [0, 0, 0, -1]],
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 2], [1, 0, 0, -1]],
    [[1, 0, 0, 0], [0, 0, 1, 0], [-1, -1, 0, 2], [1, 0, 0, -1]],
    [[1, 0, 0, 0], [0, 0, 1, 0], [-1, -1, 0, 2], [2, 0, 0, -1]],
];

fn canonical_data() -> Outcome {
    let mut checks = 0;
    for i in 1..=7 {
        let g = canonical(i);
        ensure!(
            *g == ExactMatrix::from_i64_rows(&TRANSCRIBED[i - 1]),
            "G{i} differs from the table"
        );
        ensure!(
            g.pow(4).is_identity() && !g.pow(2).is_identity(),
            "G{i} does not have order 4"
        );
        ensure!(g.det().map_err(err)?.abs().is_one(), "det G{i} ≠ ±1");
        let s = invariant_split(g).map_err(err)?;
        ensure!(
            !vector::is_zero(&s.l_plus) && !vector::is_zero(&s.l_minus) && s.plane.len() == 2,
            "G{i}: split is not (1, 1, 2)"
        );
        checks += 3;
    }
    Ok(format!("{checks} exact assertions"))
}

fn cf_from(alphas: [&FieldElement; 3]) -> Result<AlgebraicCF, String> {
    let k = alphas[0].field().clone();
    let one = k.one();
    AlgebraicCF::new(
        k,
        vec![one, alphas[0].clone(), alphas[1].clone(), alphas[2].clone()],
        None,
    )
    .map_err(err)
}

fn class_equivalence() -> Outcome {
    let (k, omega) = quartic();
    let (mut pos, mut neg) = (0, 0);
    for i in 1..=7 {
        let cf = make_class_example(i, &k, &omega).map_err(err)?;
        let report = is_symmetry(&cf, canonical(i)).map_err(err)?;
        ensure!(
            report.is_some_and(|r| r.kind == SymmetryKind::Cyclic && r.proper),
            "G{i} is not a proper cyclic symmetry of its example"
        );
        ensure!(
            verify_class_membership(&cf, i).map_err(err)?,
            "class {i} example rejected"
        );
        pos += 1;

        let [_, a, b, c] = cf.alphas() else { unreachable!() };
        let one = k.one();
        let a2 = a.apply_sigma(2);
        // Each mutation breaks exactly one identity and keeps ℓ a basis.
        let shifted = a + &one;
        let shifted_gamma = match i {
            1..=3 => shifted.apply_sigma(2),
            4 | 5 => (&shifted + &shifted.apply_sigma(2)).scale(&frac(1, 2)),
            _ => (&(&shifted + &shifted.apply_sigma(2)) + &one).scale(&frac(1, 2)),
        };
        let other_gamma = match i {
            1..=3 => (a + &a2).scale(&frac(1, 2)),
            4 | 5 => (&(a + &a2) + &one).scale(&frac(1, 2)),
            _ => a2.clone(),
        };
        let mutants = [
            ("trace", cf_from([&shifted, &shifted.apply_sigma(1), &shifted_gamma])?),
            ("γ", cf_from([a, b, &other_gamma])?),
            ("β", cf_from([a, &(b + &one), c])?),
        ];
        for (what, m) in mutants {
            ensure!(
                !verify_class_membership(&m, i).map_err(err)?,
                "class {i}: broken {what} still accepted"
            );
            neg += 1;
        }
    }
    Ok(format!("{pos} positive, {neg} negative"))
}

/// Twenty random conjugates of each `G_i`, with the class example carried along.
fn round_trip_corpus() -> Vec<(usize, ExactMatrix, AlgebraicCF)> {
    let (k, omega) = quartic();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    for i in 1..=7 {
        let cf = make_class_example(i, &k, &omega).unwrap();
        for _ in 0..20 {
            let x0 = random_unimodular(&mut rng, 4, 3);
            out.push((i, conjugate(&x0, canonical(i)), transport(&cf, &x0).unwrap()));
        }
    }
    out
}

fn normalization(corpus: &[(usize, ExactMatrix, AlgebraicCF)]) -> Outcome {
    let start = Instant::now();
    let mut max_iter = 0;
    for (i, g, cf) in corpus {
        let r = is_symmetry(cf, g).map_err(err)?.ok_or("conjugate is not a symmetry")?;
        ensure!(
            properness_checked(&r, g).map_err(err)?,
            "conjugate of G{i} is not proper"
        );
        let cert = classify(g, DEFAULT_MAX_ITER).map_err(err)?;
        ensure!(
            &conjugate(&cert.x, g) == canonical(cert.case),
            "X·G·X⁻¹ ≠ G{}",
            cert.case
        );
        let moved = transport(cf, &cert.x).map_err(err)?;
        ensure!(
            moved.alphas()[1].trace() == rat(CLASS_TRACES[cert.case - 1]),
            "class {i}: trace of the normalized α does not match case {}",
            cert.case
        );
        max_iter = max_iter.max(cert.iterations);
    }
    Ok(format!(
        "{} runs in {:.1?}, at most {max_iter} descent steps",
        corpus.len(),
        start.elapsed()
    ))
}

fn properness_criterion(proper_out: &mut Vec<ExactMatrix>) -> Outcome {
    let (k, _) = quartic();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let x4_minus_1 = palin_cf::exactmath::IntPolynomial::from_i64(&[-1, 0, 0, 0, 1]);
    let minus_one_norm = &k.theta() - &k.from_i64(2);
    ensure!(minus_one_norm.norm() == rat(-1), "θ − 2 does not have norm −1");
    let (mut total, mut proper) = (0, 0);
    while total < 100 {
        let xi = random_element(&mut rng, &k, 3);
        let mut mu = xi.apply_sigma(1).checked_div(&xi).map_err(err)?;
        if rng.gen_bool(0.5) {
            mu = &mu * &minus_one_norm;
        }
        let Some((cf, g)) = multiplier_instance(&mu) else {
            continue;
        };
        let x = random_unimodular(&mut rng, 4, 2);
        let (cf, g) = (transport(&cf, &x).map_err(err)?, conjugate(&x, &g));
        let r = is_symmetry(&cf, &g).map_err(err)?.ok_or("instance is not a symmetry")?;
        ensure!(r.kind == SymmetryKind::Cyclic, "instance is not cyclic");
        let by_report = properness_checked(&r, &g).map_err(err)?;
        let by_charpoly = g.charpoly().map_err(err)? == x4_minus_1;
        let by_order = g.pow(4).is_identity();
        ensure!(
            by_report == by_charpoly && by_charpoly == by_order,
            "disagreement: report {by_report}, charpoly {by_charpoly}, G⁴ = I {by_order}"
        );
        if by_report {
            proper += 1;
            proper_out.push(g);
        }
        total += 1;
    }
    ensure!(proper > 0 && proper < total, "only one kind of instance was generated");
    Ok(format!("{total} instances, {proper} proper, three-way agreement"))
}

fn rational_subspaces(corpus: &[ExactMatrix]) -> Outcome {
    let id = ExactMatrix::identity(4);
    for g in corpus {
        let g2 = g.pow(2);
        let plus = kernel_basis(&(g - &id), KernelMode::Integers);
        let minus = kernel_basis(&(g + &id), KernelMode::Integers);
        let plane = kernel_basis(&(&g2 + &id), KernelMode::Integers);
        ensure!(
            (plus.len(), minus.len(), plane.len()) == (1, 1, 2),
            "kernel ranks ({}, {}, {})",
            plus.len(),
            minus.len(),
            plane.len()
        );
        let all = plus.iter().chain(&minus).chain(&plane);
        ensure!(all.clone().all(|v| vector::is_integer(v)), "non-integral kernel basis");
        ensure!(g.mul_vec(&plus[0]) == plus[0], "G fixes no integer line");
        ensure!(
            g.mul_vec(&minus[0]) == vector::scale(&minus[0], &rat(-1)),
            "G negates no integer line"
        );
        for v in &plane {
            ensure!(g2.mul_vec(v) == vector::scale(v, &rat(-1)), "G² ≠ −id on the plane");
        }
    }
    Ok(format!("{} proper cyclic matrices", corpus.len()))
}

fn divisors(d: i64) -> Vec<i64> {
    (1..=d).filter(|k| d % k == 0).flat_map(|k| [k, -k]).collect()
}

fn sail_criterion() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for d in 2i64..=200 {
        if QuadraticSurd::new(0, d, 1).is_err() {
            continue; // square
        }
        // Trace 2P/Q is 0 for P = 0 and 1 for Q = 2P; then Q | D − P² forces P | D.
        let candidates = divisors(d)
            .into_iter()
            .map(|q| (0, q))
            .chain(divisors(d).into_iter().map(|p| (p, 2 * p)));
        for (p, q) in candidates {
            let Ok(s) = QuadraticSurd::new(p, d, q) else { continue };
            let r = sail2d::check_trace_criterion(&s);
            ensure!(r.trace_in_01, "({p} + √{d})/{q} has trace {}", r.trace);
            ensure!(r.palindromic, "({p} + √{d})/{q} has a non-palindromic period");
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "scan took {elapsed:?}");
    let s = sail2d::find_nonpalindromic(200, 12).ok_or("no counterexample found")?;
    let r = sail2d::check_trace_criterion(&s);
    ensure!(!r.trace_in_01 && !r.palindromic, "counterexample misreported");
    let period: Vec<String> = sail2d::expand(&s).period.iter().map(BigInt::to_string).collect();
    Ok(format!(
        "{count} surds palindromic in {elapsed:.1?}; ({} + √{})/{} has period [{}] and trace {}",
        s.p,
        s.d,
        s.q,
        period.join(", "),
        r.trace
    ))
}

fn random_parallelogram(rng: &mut ChaCha8Rng) -> (AffineLattice2D, [vector::Vector; 4]) {
    loop {
        let mut ints = |len| (0..len).map(|_| rng.gen_range(-4i64..=4)).collect::<Vec<_>>();
        let v = ints(12);
        let Ok(lat) = AffineLattice2D::new(
            vector::from_i64(&v[0..4]),
            vector::from_i64(&v[4..8]),
            vector::from_i64(&v[8..12]),
        ) else {
            continue;
        };
        let q: Vec<Rational> = (0..6)
            .map(|_| frac(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
            .collect();
        let at = |a: &Rational, b: &Rational| {
            vector::add(
                &lat.base,
                &vector::add(&vector::scale(&lat.d1, a), &vector::scale(&lat.d2, b)),
            )
        };
        let v0 = at(&q[0], &q[1]);
        let e1 = vector::sub(&at(&q[2], &q[3]), &lat.base);
        let e2 = vector::sub(&at(&q[4], &q[5]), &lat.base);
        if ExactMatrix::from_columns(&[e1.clone(), e2.clone()]).unwrap().rank() == 2 {
            let v1 = vector::add(&v0, &e1);
            let v2 = vector::add(&v1, &e2);
            let v3 = vector::add(&v0, &e2);
            return (lat, [v0, v1, v2, v3]);
        }
    }
}

fn oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let (lat, v) = random_parallelogram(&mut rng);
        let found = enumerate_lattice_points(&lat, &v).map_err(err)?;
        let sides = ExactMatrix::from_columns(&[vector::sub(&v[1], &v[0]), vector::sub(&v[3], &v[0])]).unwrap();
        let unit = |r: &Rational| !r.is_negative() && *r <= Rational::one();
        let mut brute = Vec::new();
        for a in -20i64..=20 {
            for b in -20i64..=20 {
                let x = lat.point(&BigInt::from(a), &BigInt::from(b));
                if sides
                    .solve(&vector::sub(&x, &v[0]))
                    .is_some_and(|st| unit(&st[0]) && unit(&st[1]))
                {
                    brute.push(x);
                }
            }
        }
        ensure!(found == brute, "enumeration differs from brute force");
    }
    for _ in 0..100 {
        let m = random_int_matrix(&mut rng, 4, 4, 9);
        let chi = m.charpoly().map_err(err)?;
        ensure!(chi.eval_matrix(&m) == ExactMatrix::zeros(4, 4), "Cayley–Hamilton fails");
    }
    let (k, _) = quartic();
    for _ in 0..100 {
        let a = random_element(&mut rng, &k, 6);
        let conj: Vec<FieldElement> = (0..4).map(|j| a.apply_sigma(j)).collect();
        let sum = conj[1..].iter().fold(conj[0].clone(), |s, x| &s + x);
        let prod = conj[1..].iter().fold(conj[0].clone(), |s, x| &s * x);
        ensure!(
            sum.as_rational() == Some(a.trace()),
            "trace differs from the sum of conjugates"
        );
        ensure!(
            prod.as_rational() == Some(a.norm()),
            "norm differs from the product of conjugates"
        );
        ensure!(!a.norm().is_zero(), "nonzero element of norm zero");
    }
    Ok("50 parallelograms, 100 Cayley–Hamilton, 100 trace/norm".into())
}

fn report(n: usize, f: impl FnOnce() -> Outcome) -> bool {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into()))
    });
    match outcome {
        Ok(detail) => {
            println!("PASS criterion {n}: {detail}");
            true
        }
        Err(why) => {
            println!("FAIL criterion {n}: {why}");
            false
        }
    }
}

fn main() {
    let corpus = round_trip_corpus();
    let mut proper = Vec::new();
    let results = [
        report(1, existence),
        report(2, canonical_data),
        report(3, class_equivalence),
        report(4, || normalization(&corpus)),
        report(5, || properness_criterion(&mut proper)),
        report(6, || {
            let mut all: Vec<ExactMatrix> = (1..=7).map(|i| canonical(i).clone()).collect();
            all.extend(corpus.iter().map(|(_, g, _)| g.clone()));
            all.extend(proper.iter().cloned());
            rational_subspaces(&all)
        }),
        report(7, sail_criterion),
        report(8, oracles),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
