use thiserror::Error;

/// Errors raised by the matching, series and bijection operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {reason}")]
    Parse { position: usize, reason: String },

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("position out of range: s={s}, t={t}, allowed 1 <= s <= t <= {max}")]
    PositionOutOfRange { s: usize, t: usize, max: usize },

    #[error("empty matching has no edge on the last node")]
    EmptyMatching,

    #[error("matching {matching} contains pattern {pattern}")]
    PatternOccurrence { matching: String, pattern: String },

    #[error("inconsistent decomposition: {0}")]
    InconsistentDecomposition(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("cell ({row}, {col}) is not a removable corner")]
    NotACorner { row: usize, col: usize },

    #[error("schroeder path has a peak at level one")]
    LowPeak,

    #[error("non-integral value {value} from {formula}")]
    NonIntegral { formula: String, value: String },

    #[error("series iteration did not converge within {0} passes")]
    NoConvergence(usize),

    #[error("unsupported pattern {0}: not one of the six generating-tree patterns")]
    UnsupportedPattern(String),

    #[error("diagram too wide: {columns} columns exceeds limit {limit}; use the comma format instead")]
    TooWide { columns: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
