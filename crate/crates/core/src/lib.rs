//! Exact structure theory of real Lie algebras given by rational structure
//! constants: Killing forms, radicals, Levi factors, Jordan decompositions,
//! root systems, and the construction of maximal tori and maximal nilpotent
//! subalgebras containing a given one.

pub mod embed;
pub mod error;
pub mod exactlin;
pub mod liecore;
pub mod rootsys;
pub mod vecfield;

pub use error::{LieError, Result};
