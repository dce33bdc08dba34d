use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatioError {
    #[error("edge time must be positive, got {0}")]
    NonPositiveTime(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Core(#[from] sssp_core::Error),
}

pub type Result<T> = std::result::Result<T, RatioError>;
