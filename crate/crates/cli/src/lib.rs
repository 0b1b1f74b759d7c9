//! Command-line front end for `casimir-core`: tables as CSV or JSON, SVG
//! curves, and process exit codes.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 invalid input, 3 a series that
//! did not converge or would cancel, 4 a `gp` row outside tolerance.

pub mod commands;
pub mod output;
pub mod svg;

pub use commands::{run, Cli, CliError};
