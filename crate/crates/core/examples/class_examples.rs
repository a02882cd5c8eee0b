// One member of each of the seven quartic classes, and its canonical symmetry.

use palin_cf::classifier4::{canonical, has_proper_cyclic_symmetry, make_class_example, verify_class_membership};
use palin_cf::numberfield::gaussian_period_field;

pub fn run_example() {
    let (k, omega) = gaussian_period_field(17, 4).unwrap();
    for i in 1..=7 {
        let cf = make_class_example(i, &k, &omega).unwrap();
        let alpha = &cf.alphas()[1];
        let members: Vec<usize> = (1..=7).filter(|&j| verify_class_membership(&cf, j).unwrap()).collect();
        assert!(members.contains(&i));
        assert!(has_proper_cyclic_symmetry(&cf, canonical(i)).unwrap());
        println!("class {i}: Tr α = {}, classes satisfied {members:?}", alpha.trace());
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
