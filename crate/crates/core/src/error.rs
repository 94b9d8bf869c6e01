use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid word: value {0} appears more than once")]
    DuplicateValue(u32),

    #[error("invalid step '{ch}' at index {index}")]
    InvalidStep { ch: char, index: usize },

    #[error("negative height at index {0}")]
    NegativeHeight(usize),

    #[error("unbalanced")]
    Unbalanced,

    #[error("empty path has no first-return decomposition")]
    EmptyPath,

    #[error("permutation contains the pattern 3-1-2")]
    NotAvoider,

    #[error("not in domain: {0}")]
    NotInDomain(String),

    #[error("unknown pattern '{0}' (expected one of 123, 132, 213, 231, 321)")]
    UnknownPattern(String),

    #[error("{0}")]
    OutOfDomain(String),

    #[error("n = {n} exceeds the brute-force bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("internal consistency error: {0}")]
    Inconsistency(String),

    #[error("b-file line {line}: {msg}")]
    BFile { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
