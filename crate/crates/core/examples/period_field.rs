// The real cyclic quartic field inside ℚ(ζ₁₇), built from Gaussian periods.

use palin_cf::exactmath::rational::rat;
use palin_cf::numberfield::{gaussian_period_field, isolate_roots};

pub fn run_example() {
    let (k, omega) = gaussian_period_field(17, 4).unwrap();
    println!("minimal polynomial of ω: {}", k.minpoly());
    println!("σ in the power basis:\n{}", k.sigma());

    let conjugates: Vec<_> = (0..4).map(|j| omega.apply_sigma(j)).collect();
    for (j, c) in conjugates.iter().enumerate() {
        println!("σ^{j}(ω) = {c}");
    }
    assert_eq!(conjugates[0].apply_sigma(4), conjugates[0]);

    let x = &conjugates[1] - &conjugates[0].scale(&rat(2));
    let (t, n) = x.trace_and_norm();
    println!("x = σω − 2ω: Tr = {t}, N = {n}, minpoly {}", x.minpoly());

    let iso = isolate_roots(k.minpoly()).unwrap();
    let signs: Vec<i8> = (0..4).map(|i| x.sign_at(&iso, i).unwrap()).collect();
    println!("signs of x under the four embeddings: {signs:?}");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
