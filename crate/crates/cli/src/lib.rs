//! Command implementations behind the `semitight` binary.
//!
//! Every command produces a [`CommandOutput`]: a serializable report, a
//! table rendering of the same data, and the process exit status. Parallel
//! work runs on a rayon pool sized by [`RunConfig::jobs`]; results are
//! always collected in input order, so output bytes do not depend on
//! scheduling.

pub mod commands;
pub mod config;
pub mod parallel;
pub mod report;

pub use commands::{execute, CommandOutput};
pub use config::{Command, OutputFormat, RunConfig};

/// Process exit codes.
pub mod exit {
    /// Success, and every internal agreement check passed.
    pub const OK: i32 = 0;
    /// Usage or configuration error.
    pub const USAGE: i32 = 1;
    /// A verified mathematical disagreement between two computations.
    pub const DISAGREEMENT: i32 = 2;
}
