//! Shortest paths whose weights are too large for scalars.
//!
//! Path weights are persistent colored binary trees in a shared
//! [`TreeStore`]; the dense algorithm runs unchanged on top of them.

pub mod bin;
pub mod error;
pub mod lex;
pub mod normalize;
pub mod sssp;
pub mod store;

pub use bin::BinKind;
pub use error::{ExoticError, Result};
pub use lex::LexKind;
pub use normalize::normalize_exponents;
pub use store::{Comparison, Dir, NodeRec, Part, Prefix, TreeId, TreeStore, Witness};
pub use sssp::{bin_distances, bin_graph, binary_sssp, lex_bottleneck_sssp, lex_distances, lex_graph, BinGraph, LexGraph, TreeDistance};
