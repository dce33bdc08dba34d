use thiserror::Error;

use crate::gen::GenerationError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Generation(#[from] GenerationError),
    #[error("input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] sssp_core::Error),
    #[error(transparent)]
    Exotic(#[from] sssp_exotic::ExoticError),
    #[error(transparent)]
    Ratio(#[from] sssp_minratio::RatioError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
