use thiserror::Error;

/// Maximum number of vertices a [`crate::Graph`] can hold (one `u64` row per vertex).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have between 1 and {MAX_VERTICES} vertices, got {0}")]
    VertexCount(usize),

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid clique cover: {0}")]
    InvalidCover(String),

    #[error("cover has {s} parts but no maximal independent set has that size")]
    ClassCondition { s: usize },

    #[error("size bound exceeded: {n} > limit {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("left and right sides overlap")]
    OverlappingSides,

    #[error("index {index} out of range (size {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("linear form is zero in the quotient ring")]
    ZeroInRing,

    #[error("ideal is not square-free")]
    NotSquareFree,

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("invalid algebraic input: {0}")]
    InvalidAlgebra(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),

    #[error("malformed report: {0}")]
    Report(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    /// True for errors caused by exceeding a configured size bound.
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::VertexCount(_) | Error::SizeLimit { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
