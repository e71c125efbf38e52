//! Command-line front end for the `pompeiu` crate: problem files, JSON
//! certificate documents, and a verifier that re-checks a document using
//! field arithmetic only.

mod commands;
pub mod config;
pub mod document;
mod error;
pub mod instance;
pub mod verify;

pub use commands::{execute, run, Cli, Command, Output};
pub use error::CliError;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub mod book_cli {}
