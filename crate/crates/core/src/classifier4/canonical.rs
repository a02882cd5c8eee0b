//! The seven canonical proper cyclic symmetries of ℤ⁴ and the case tables
//! that map a normalized orbit onto them.

use std::sync::OnceLock;

use crate::exactmath::rational::frac;
use crate::exactmath::vector::{self, Vector};
use crate::exactmath::ExactMatrix;

const G: [[[i64; 4]; 4]; 7] = [
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, -1, -1, -1]],
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, -1, -1, -1]],
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [2, -1, -1, -1]],
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 2], [0, 0, 0, -1]],
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 2], [1, 0, 0, -1]],
    [[1, 0, 0, 0], [0, 0, 1, 0], [-1, -1, 0, 2], [1, 0, 0, -1]],
    [[1, 0, 0, 0], [0, 0, 1, 0], [-1, -1, 0, 2], [2, 0, 0, -1]],
];

/// `Tr α` for the class whose canonical symmetry is `G_i`.
pub const CLASS_TRACES: [i64; 7] = [0, 1, 2, 0, 2, 0, 2];

/// Target frames: column `k` is the image of the `k`-th source vector.
const FRAMES: [[[i64; 4]; 4]; 7] = [
    [[1, -1, 0, 0], [1, 0, 0, 1], [1, 0, 1, -1], [1, 0, 0, 0]],
    [[1, 0, 0, 0], [1, 0, 0, 1], [1, 0, 1, 0], [1, 1, 0, 0]],
    [[1, 0, 0, 0], [1, 0, 0, 1], [1, 0, 1, 0], [1, 1, 0, 0]],
    [[1, 0, -1, 1], [1, -1, 2, -1], [1, 1, -1, 1], [1, 0, 0, 0]],
    // The last vector is the midpoint of the images e₁+e₄ and e₁+2e₂+e₄ of
    // z₂ and z₄; e₁+e₂ would not conjugate to G₅.
    [[1, 0, 0, 0], [1, 0, 0, 1], [1, 0, 1, 0], [1, 1, 0, 1]],
    [[1, 1, 0, 1], [1, 0, 0, 0], [1, 0, -1, 1], [1, 0, 0, 1]],
    [[1, 1, -1, 2], [1, -1, 2, 0], [1, 2, 0, 2], [1, 0, 0, 1]],
];

/// `G₁ … G₇` (index 0 holds `G₁`). Each is checked on first use to have
/// order 4 and determinant ±1.
pub fn canonical_matrices() -> &'static [ExactMatrix; 7] {
    static CELL: OnceLock<[ExactMatrix; 7]> = OnceLock::new();
    CELL.get_or_init(|| {
        let ms = G.map(|rows| ExactMatrix::from_i64_rows(&rows));
        for (i, m) in ms.iter().enumerate() {
            assert!(m.pow(4).is_identity(), "G{} does not have order dividing 4", i + 1);
            assert!(m.is_unimodular(), "G{} is not unimodular", i + 1);
        }
        ms
    })
}

/// `G_i` for `i ∈ 1..=7`.
pub fn canonical(i: usize) -> &'static ExactMatrix {
    &canonical_matrices()[i - 1]
}

/// The 1-based index of `g` among the canonical matrices.
pub fn canonical_index(g: &ExactMatrix) -> Option<usize> {
    canonical_matrices().iter().position(|m| m == g).map(|i| i + 1)
}

/// Target frame for case `i` as a matrix with the frame vectors as columns.
pub fn target_frame(i: usize) -> ExactMatrix {
    let cols: Vec<Vector> = FRAMES[i - 1].iter().map(|c| vector::from_i64(c)).collect();
    ExactMatrix::from_columns(&cols).expect("4×4 frame")
}

/// The case-`i` source tuple built from an orbit `z₁ … z₄`.
pub fn source_tuple(i: usize, z: &[Vector; 4]) -> [Vector; 4] {
    let comb = |c: [i64; 4], d: i64| -> Vector {
        z.iter().zip(c).fold(vector::zero(4), |acc, (v, k)| {
            vector::add(&acc, &vector::scale(v, &frac(k, d)))
        })
    };
    let [z1, z2, z3, z4] = z.clone();
    match i {
        1 => [z1, z2, z3, comb([1, 1, 1, 1], 4)],
        2 => [z1, z2, z3, z4],
        3 => [z1, comb([1, 1, 0, 0], 2), comb([1, 0, 1, 0], 2), comb([1, 0, 0, 1], 2)],
        4 => [z1, z2, comb([1, 0, 1, 0], 2), comb([1, 1, 1, 1], 4)],
        5 => [z1, z2, comb([1, 0, 1, 0], 2), comb([0, 1, 0, 1], 2)],
        6 => [z1, z2, z3, comb([1, -1, 1, 1], 2)],
        // (z₁+z₂)/2 + (z₁+z₄−z₃−z₂)/4
        7 => [z1, z2, z3, comb([3, 1, -1, 1], 4)],
        _ => panic!("case index {i} outside 1..=7"),
    }
}
