use thiserror::Error;

/// Errors raised by the semigroup, biorder, complex and presentation layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("empty generator list")]
    NoGenerators,

    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),

    #[error("element {0} is not regular")]
    NotRegularElement(usize),

    #[error("incidence system is not 0-simple: {0}")]
    NotZeroSimple(String),

    #[error("the semigroup has no idempotents")]
    NoIdempotents,

    #[error("corners do not form a non-degenerate E-square")]
    NotASquare,

    #[error("not an E-path: {0}")]
    NotAnEPath(String),

    #[error("vertex {0} not found")]
    VertexNotFound(usize),

    #[error("malformed complex: {0}")]
    MalformedComplex(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("verification mismatch: {0}")]
    VerificationMismatch(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
