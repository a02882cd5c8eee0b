//! Exact construction, symmetry testing and classification of palindromic
//! algebraic continued fractions, with the two-dimensional case via
//! periodic expansions of quadratic surds.

pub mod cf_core;
pub mod classifier4;
pub mod error;
pub mod exactmath;
pub mod numberfield;
pub mod palindrome;
pub mod sail2d;

pub use error::{Error, Result};
