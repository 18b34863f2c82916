use thiserror::Error;

/// Failure to read a term or a tree from its concrete syntax.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unknown character {ch:?} at byte {offset}")]
    UnknownChar { offset: usize, ch: char },
    #[error("unexpected {found} at byte {offset}, expected one of: {}", expected.join(", "))]
    Unexpected {
        offset: usize,
        found: String,
        expected: Vec<&'static str>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{op}: term is not in the {expected} language")]
    WrongLanguage {
        op: &'static str,
        expected: &'static str,
    },
    #[error("{op}: term is not in the required normal-form category")]
    NotNormal { op: &'static str },
    #[error("unbound schema variable {0}")]
    UnboundVariable(String),
    #[error("term has {atoms} atom occurrences, limit is {limit}")]
    GuardExceeded { atoms: usize, limit: usize },
    #[error("tree is not in the image of the evaluator: {0}")]
    NotInImage(String),
    #[error("inconsistent trace set: {0}")]
    BadTraces(String),
    #[error("unknown catalog {0:?}")]
    UnknownCatalog(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
