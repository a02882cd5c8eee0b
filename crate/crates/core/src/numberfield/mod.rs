//! Totally real cyclic number fields.

pub mod field;
pub mod gaussian;
pub mod modp;
pub mod roots;

pub use field::{CyclicField, FieldElement, FieldRef, FieldRefExt};
pub use gaussian::{gaussian_period_field, is_prime, primitive_root};
pub use roots::{isolate_roots, refine_sign, RootIsolation};
