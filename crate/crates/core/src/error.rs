use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix has index {index}; a group inverse needs index at most 1")]
    IndexTooLarge { index: usize },

    #[error("supplied matrix is not a {{1}}-inverse (AXA != A)")]
    NotAOneInverse,

    #[error("orthogonality violated: {0}")]
    OrthogonalityViolated(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("zero polynomial not allowed in {0}")]
    ZeroPolynomial(&'static str),

    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),

    #[error("arc {0} -> {1} has zero weight")]
    ZeroWeight(usize, usize),

    #[error("arc {0} -> {1} stays inside one part of the partition")]
    NotBipartiteForPartition(usize, usize),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("partition parts have sizes {left} and {right}")]
    UnequalParts { left: usize, right: usize },

    #[error("vector {0} is not strictly positive")]
    NonPositiveVector(String),

    #[error("vector {0} has a zero entry")]
    ZeroEntry(String),

    #[error("inner product {0} is zero")]
    ZeroInnerProduct(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("unknown suite '{0}'")]
    UnknownSuite(String),

    /// A computed result failed its own post-condition check.
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(line: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            line,
            reason: reason.into(),
        }
    }
}
