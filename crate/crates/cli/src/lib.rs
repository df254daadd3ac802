//! Command-line layer for `hgpart`: argument parsing, command handlers and
//! the small-instance sweeps shared with the acceptance tests.

pub mod census;
pub mod commands;
pub mod sweep;

pub use commands::{run, run_args, Cli, Command, Outcome, EXIT_HARD, EXIT_OK, EXIT_USAGE};
