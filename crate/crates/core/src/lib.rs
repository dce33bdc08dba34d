//! Strongly polynomial parallel SSSP over non-negative weights.
//!
//! Every algorithm discovers the `t` vertices closest to the source, contracts
//! them into it, and repeats. They differ in the subgraph the `t`-nearest
//! kernel is run on.

pub mod alive;
pub mod basic;
pub mod dense;
pub mod dijkstra;
pub mod error;
pub mod graph;
pub mod io;
pub mod nearest;
pub mod nearlist;
pub mod observe;
pub mod rt;
pub mod sparse;
pub mod weights;

pub use error::Error;
pub use graph::Digraph;
pub use rt::{Backend, Counters, Runtime};
pub use weights::{Lifted, LiftedAtom, LiftedValue, LiftedWeight, RealKind, WeightKind};
