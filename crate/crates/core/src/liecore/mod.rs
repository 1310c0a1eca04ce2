//! Lie algebras from structure constants and their basic structure theory.

pub mod algebra;
pub mod jordan;
pub mod structure;
pub mod subspace;
pub mod weights;

pub use algebra::{AlgebraJson, BracketJson, Element, LieAlgebra};
pub use jordan::{
    classify_element, classify_matrix, jordan_decomposition, positive_eigenvectors, ElementClass, ElementKind,
};
pub use structure::{
    center, centralizer, derived_algebra, derived_series, is_abelian, is_ad_nilpotent, is_compact_subspace, is_negative_definite,
    is_solvable, is_subalgebra, killing_form, killing_form_of, killing_signature, levi_decomposition, normalizer,
    radical, restricted_ad, restricted_killing_form, signature, subalgebra_generated,
};
pub use subspace::Subspace;
pub use weights::{joint_eigenspaces, rational_parts, torus_split, WeightSpace};
