//! Command-line front end for the `markov_laguerre` crate.

pub mod args;
pub mod commands;
pub mod error;
pub mod sweep;
pub mod verify;

pub use args::Cli;
pub use commands::{run, Status};
pub use error::CliError;
