use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants fall into three bands that the CLI maps to exit codes: malformed
/// input ([`Error::is_schema`]), violated preconditions, and falsified
/// internal invariants ([`Error::Invariant`]).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet size mismatch: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("partition {0:?} is not weakly decreasing")]
    NotAPartition(Vec<u32>),

    #[error("inner partition {inner:?} is not contained in outer {outer:?}")]
    NotContained { outer: Vec<u32>, inner: Vec<u32> },

    #[error("a shape tuple needs at least one shape")]
    EmptyTuple,

    #[error("boundary is empty: every partition in the tuple has zero parts")]
    EmptyBoundary,

    #[error("index {index} out of range 1..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("operation needs exactly two shapes, got {0}")]
    NotTwoShapes(usize),

    #[error("alphabet size must be at least 1")]
    ZeroAlphabet,

    #[error("invalid face: {0}")]
    InvalidFace(String),

    #[error("invalid walk start: {0}")]
    InvalidStart(String),

    #[error("arc weight is not an integer: {0}")]
    HalfIntegerArc(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("family members have different bead geometry: {0}")]
    GeometryMismatch(String),

    #[error("matrix is singular at row {0}")]
    Singular(usize),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Malformed input: bad partitions, bad tuples, bad faces.
    pub fn is_schema(&self) -> bool {
        matches!(
            self,
            Error::NotAPartition(_)
                | Error::NotContained { .. }
                | Error::EmptyTuple
                | Error::EmptyBoundary
                | Error::InvalidFace(_)
        )
    }

    pub fn is_invariant(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invariant(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}
