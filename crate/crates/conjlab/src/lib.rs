//! Command-line front end for `conjlab-core`: argument parsing, potential
//! files and deterministic JSON, DOT and table output.

pub mod cli;
pub mod commands;
pub mod error;
pub mod input;
pub mod output;

pub use cli::Cli;
pub use commands::{run, Outcome, Settings};
pub use error::CliError;
