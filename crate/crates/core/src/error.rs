use thiserror::Error;

/// Errors raised by the soft-set algebra, the deciders and the search front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("unknown parameter `{0}`")]
    UnknownParam(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("a signature needs at least one point and one parameter")]
    EmptySignature,
    #[error("|X|·|E| = {cells} exceeds the cell bound {bound}")]
    TooManyCells { cells: usize, bound: usize },
    #[error("soft sets live over different signatures")]
    SignatureMismatch,
    #[error("subset of the universe must be nonempty")]
    EmptySubset,
    #[error("parameter domains are disjoint; intersection is undefined")]
    DisjointDomains,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
