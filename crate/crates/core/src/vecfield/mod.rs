//! Polynomial vector fields, their brackets, and the built-in catalogs.

pub mod catalog;
pub mod field;
pub mod invariants;
pub mod mpoly;
pub mod tables;

pub use catalog::{algebra, reference_table, so_pq, vector_fields};
pub use field::{structure_constants, vf_bracket, FieldSet, FieldSetJson, PolyVectorField};
pub use invariants::{generic_rank, invariant_count};
pub use mpoly::MPoly;
