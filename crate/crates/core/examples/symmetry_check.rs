// Which unimodular matrices permute the eigenlines of a fraction, and how.

use palin_cf::cf_core::{is_symmetry, properness_checked, SymmetryKind};
use palin_cf::classifier4::{canonical, make_class_example};
use palin_cf::exactmath::rational::rat;
use palin_cf::exactmath::ExactMatrix;
use palin_cf::numberfield::gaussian_period_field;

pub fn run_example() {
    let (k, omega) = gaussian_period_field(17, 4).unwrap();
    let cf = make_class_example(1, &k, &omega).unwrap();

    let g1 = canonical(1);
    let r = is_symmetry(&cf, g1).unwrap().expect("G₁ is a symmetry");
    assert_eq!(r.kind, SymmetryKind::Cyclic);
    assert!(properness_checked(&r, g1).unwrap());
    println!("G₁: {} symmetry, permutation {:?}, proper", r.kind, r.permutation());

    let r = is_symmetry(&cf, &g1.pow(2)).unwrap().unwrap();
    println!("G₁²: {} symmetry, permutation {:?}", r.kind, r.permutation());

    let id = is_symmetry(&cf, &ExactMatrix::identity(4)).unwrap().unwrap();
    assert_eq!(id.kind, SymmetryKind::Dirichlet);

    let mut bent = g1.clone();
    bent[(0, 1)] = rat(1);
    assert!(is_symmetry(&cf, &bent).unwrap().is_none());
    println!("perturbing one entry of G₁ destroys the symmetry");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
