use lieembed::LieError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("cannot read {0}: {1}")]
    Io(String, String),
    #[error("malformed JSON in {0}: {1}")]
    Json(String, String),
    #[error("{0}")]
    Usage(String),
    #[error("{0} of {1} corpus cases failed")]
    Mismatch(usize, usize),
}

impl CliError {
    /// Process exit code: 1 corpus mismatch, 2 unreadable input, 3 broken
    /// invariant, 4 eigenvalues beyond one quadratic field, 5 failed
    /// precondition.
    pub fn exit_code(&self) -> i32 {
        use LieError::*;
        match self {
            CliError::Mismatch(..) => 1,
            CliError::Io(..) | CliError::Json(..) | CliError::Usage(_) => 2,
            CliError::Lie(e) => match e {
                Parse(_) | UnknownCatalog(_) | DimensionMismatch { .. } => 2,
                NotAntisymmetric(..) | JacobiViolation(..) | NotClosed(..) | Invariant(_) => 3,
                ExtensionDegreeTooHigh(_) => 4,
                NotASubalgebra | NotATorus(_) | NotNilpotent | NotAbelian | NoRealSemisimpleFound
                | NoCompactFound | NotSplit(_) | DegenerateRoot(_) | UnrecognizedBondPattern(..)
                | UnrecognizedDiagram(_) => 5,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
