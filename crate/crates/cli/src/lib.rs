//! CLI companion to `gaussbound-core`: state files, report serialization,
//! parameter sweeps, and the subcommand implementations.

pub mod commands;
pub mod error;
pub mod report;
pub mod statefile;
pub mod sweep;

pub use error::{CliError, CliResult};
