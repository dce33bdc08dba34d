//! Harness around the SSSP toolkit: seeded generators, runners with oracle
//! cross-checks, counter reports and min-ratio script replay.

pub mod error;
pub mod gen;
pub mod replay;
pub mod run;

pub use error::{CliError, Result};
pub use gen::{generate, generate_atoms, structure, Family, GenerationError, Kind};
pub use replay::replay;
pub use run::{csv_rows, run_atoms, run_real, run_text, Algo, RunOutput, RunReport, CSV_HEADER};
