#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExoticError {
    #[error("tree of depth {depth} exceeds the bound {bound}")]
    DepthExceeded { depth: u32, bound: u32 },
    #[error("atom {atom} outside the supported range 0..{limit}")]
    InvalidAtom { atom: u64, limit: u64 },
    #[error("unknown tree id {0}")]
    UnknownTree(TreeId),
    #[error(transparent)]
    Core(#[from] sssp_core::Error),
}

use crate::store::TreeId;

pub type Result<T> = std::result::Result<T, ExoticError>;
