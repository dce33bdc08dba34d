use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("cannot contract a set containing the source")]
    InvalidContraction,
    #[error("no distance supplied for contracted vertex {0}")]
    MissingDistance(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("reduction over an empty sequence")]
    EmptyReduce,
    #[error("invariant breached: {0}")]
    InvariantBreach(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
