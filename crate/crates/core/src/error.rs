use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("structure constants violate antisymmetry at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("structure constants violate the Jacobi identity at ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
    #[error("eigenvalues need an extension beyond a single quadratic field: {0}")]
    ExtensionDegreeTooHigh(String),
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
    #[error("not a torus: {0}")]
    NotATorus(String),
    #[error("not a subalgebra of ad-nilpotent elements")]
    NotNilpotent,
    #[error("not abelian")]
    NotAbelian,
    #[error("no real semisimple element found within the search budget")]
    NoRealSemisimpleFound,
    #[error("no compact semisimple element found within the search budget")]
    NoCompactFound,
    #[error("torus is not a split Cartan subalgebra: {0}")]
    NotSplit(String),
    #[error("root {0} has a degenerate sl2 pairing")]
    DegenerateRoot(String),
    #[error("unrecognized bond pattern between {0} and {1}")]
    UnrecognizedBondPattern(String, String),
    #[error("unrecognized Dynkin diagram: {0}")]
    UnrecognizedDiagram(String),
    #[error("vector fields do not close under the bracket: [{0}, {1}] is outside their span")]
    NotClosed(String, String),
    #[error("unknown catalog entry: {0}")]
    UnknownCatalog(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, LieError>;
