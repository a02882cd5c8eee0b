// Hermite form, integer kernels and characteristic polynomials, all exact.

use palin_cf::exactmath::vector;
use palin_cf::exactmath::{hermite_form, kernel_basis, ExactMatrix, KernelMode};

pub fn run_example() {
    let m = ExactMatrix::from_i64_rows(&[[2, 4, 4], [-6, 6, 12], [10, 4, 16]]);
    let (h, u) = hermite_form(&m).unwrap();
    assert_eq!(&u * &m, h);
    assert!(u.is_unimodular());
    println!("M =\n{m}H = U·M =\n{h}");

    // ker(G − I) for an order-4 operator: a primitive integer generator.
    let g = ExactMatrix::from_i64_rows(&[[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, -1, -1, -1]]);
    let fixed = kernel_basis(&(&g - &ExactMatrix::identity(4)), KernelMode::Integers);
    println!("ker(G − I) ∩ ℤ⁴ is spanned by {}", vector::to_string(&fixed[0]));

    let chi = g.charpoly().unwrap();
    assert_eq!(chi.eval_matrix(&g), ExactMatrix::zeros(4, 4));
    println!("χ_G(x) = {chi}, and χ_G(G) = 0");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
