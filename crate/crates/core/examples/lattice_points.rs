// Integer points of a rational plane in ℚ⁴ and of a parallelogram in it.

use palin_cf::exactmath::rational::rat;
use palin_cf::exactmath::vector;
use palin_cf::exactmath::{enumerate_lattice_points, integer_points_of_plane};

pub fn run_example() {
    // x₁ + x₂ + x₃ + x₄ = 2, x₁ − x₃ = 0
    let plane = integer_points_of_plane(&[
        (vector::from_i64(&[1, 1, 1, 1]), rat(2)),
        (vector::from_i64(&[1, 0, -1, 0]), rat(0)),
    ])
    .unwrap()
    .expect("the plane has integer points");
    println!(
        "base {}, directions {} {}",
        vector::to_string(&plane.base),
        vector::to_string(&plane.d1),
        vector::to_string(&plane.d2)
    );

    let o = plane.point(&0.into(), &0.into());
    let a = plane.point(&3.into(), &0.into());
    let b = plane.point(&1.into(), &2.into());
    let c = vector::add(&a, &vector::sub(&b, &o));
    let pts = enumerate_lattice_points(&plane, &[o, a, c, b]).unwrap();
    // Pick: lattice area 6 with 8 boundary points, hence 3 interior ones.
    assert_eq!(pts.len(), 11);
    for p in &pts {
        println!("  {}", vector::to_string(p));
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
