//! Proper cyclic symmetries in dimension four: every such operator is
//! conjugate in GL₄(ℤ) to one of seven canonical matrices, and the fractions
//! they preserve fall into seven classes.

pub mod canonical;
pub mod cases;
pub mod classes;
pub mod split;
pub mod zproc;

pub use canonical::{canonical, canonical_index, canonical_matrices, source_tuple, target_frame, CLASS_TRACES};
pub use cases::{build_conjugator, classify, detect_case, CaseCertificate};
pub use classes::{has_proper_cyclic_symmetry, make_class_example, transport, verify_class_membership};
pub use split::{hyperplane_frame, invariant_split, HyperplaneFrame, InvariantSplit};
pub use zproc::{z_descent, z_procedure, z_procedure_capped, ZQuadruple, DEFAULT_MAX_ITER};
