//! Exact rational and integer linear algebra.

pub mod hnf;
pub mod lattice;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod vector;

pub use hnf::{hermite_form, kernel_basis, KernelMode};
pub use lattice::{enumerate_lattice_points, integer_points_of_plane, lattice_points, AffineLattice2D};
pub use matrix::ExactMatrix;
pub use poly::IntPolynomial;
pub use rational::Rational;
pub use vector::Vector;
