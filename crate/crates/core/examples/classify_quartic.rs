// Recovering the canonical form of a disguised proper cyclic symmetry.

use palin_cf::cf_core::is_symmetry;
use palin_cf::classifier4::{canonical, classify, invariant_split, make_class_example, transport, DEFAULT_MAX_ITER};
use palin_cf::exactmath::{vector, ExactMatrix};
use palin_cf::numberfield::gaussian_period_field;

pub fn run_example() {
    let (k, omega) = gaussian_period_field(17, 4).unwrap();
    let x0 = ExactMatrix::from_i64_rows(&[[1, 2, 0, -1], [0, 1, 1, 0], [0, 0, 1, 1], [1, 1, 1, 0]]);
    assert!(x0.is_unimodular());
    for i in [2, 5, 7] {
        let cf = transport(&make_class_example(i, &k, &omega).unwrap(), &x0).unwrap();
        let g = &(&x0 * canonical(i)) * &x0.inverse().unwrap();
        assert!(is_symmetry(&cf, &g).unwrap().is_some_and(|r| r.proper));

        let split = invariant_split(&g).unwrap();
        println!(
            "G = X₀·G{i}·X₀⁻¹ =\n{g}l₊ = {}, l₋ = {}",
            vector::to_string(&split.l_plus),
            vector::to_string(&split.l_minus)
        );

        let cert = classify(&g, DEFAULT_MAX_ITER).unwrap();
        assert_eq!(&(&(&cert.x * &g) * &cert.x.inverse().unwrap()), canonical(cert.case));
        println!("→ case {} (matches {:?}), X =\n{}", cert.case, cert.matches, cert.x);
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
