//! Incremental minimum cost-to-time ratio cycle.
//!
//! Each insertion finds `min(λ*, λ_pq)` by running a parallel SSSP algorithm
//! on symbolic weights `a + bλ`, resolving its comparisons with a
//! non-negative-weight test, then repairs the attesting potential.

pub mod error;
pub mod linear;
pub mod script;
pub mod state;

pub use error::{RatioError, Result};
pub use linear::{Decide, Interval, Linear, LinearKind, SearchStats};
pub use script::{parse_script, write_script};
pub use state::{attests, dag_potential, is_cycle, ratio, Comparator, InsertReport, RatioEdge, RatioState, SearchOptions, SearchOutcome, Tester};
