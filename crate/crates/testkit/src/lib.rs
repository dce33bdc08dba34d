//! Seeded generators, brute-force oracles and property checks shared by the
//! test suites of the workspace.

pub mod check;
pub mod gen;
pub mod oracle;
pub mod trees;
