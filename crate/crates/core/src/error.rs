use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q -> q^0 is not a field morphism of Q(q)")]
    ZeroSubstitution,

    #[error("truncation order must be at least 1")]
    ZeroOrder,

    #[error("truncation order must be at least {min}, got {got}")]
    OrderTooLow { min: usize, got: usize },

    #[error("exponential needs a series with zero constant term (got {0})")]
    NonzeroConstantTerm(String),

    #[error("cannot exponentiate a series without a truncation order")]
    UnboundedSeries,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular (determinant {0})")]
    Singular(String),

    #[error("need at least {min} strands, got {got}")]
    TooFewStrands { min: usize, got: usize },

    #[error("generator index {index} is out of range for {strands} strands")]
    GeneratorOutOfRange { index: i64, strands: usize },

    #[error("invalid pure braid generator indices ({i}, {j}) for {strands} strands")]
    InvalidChord { i: usize, j: usize, strands: usize },

    #[error("braid word is not pure (underlying permutation {0:?})")]
    NotPure(Vec<usize>),

    #[error("cabling parameter {0} is out of range")]
    InvalidCablingParameter(i64),

    #[error("{0} is not a unit of the Laurent polynomial ring")]
    NotAUnit(String),

    #[error("scaling factor must be nonzero")]
    ZeroScale,

    #[error("strand count mismatch: expected {expected}, got {got}")]
    StrandMismatch { expected: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
