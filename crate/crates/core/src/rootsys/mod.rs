//! Root space decompositions, simple roots and Dynkin diagrams.

pub mod dynkin;
pub mod roots;

pub use dynkin::{bond, dynkin_type, Bond, DynkinDiagram};
pub use roots::{
    add_roots, circle_element, conjugation_pairing, is_positive, neg_root, positive_roots, restricted_roots,
    root_pair, root_space_decomposition, scale_root, simple_roots, sl2_triple, Root, RootSpaceDecomposition,
};
