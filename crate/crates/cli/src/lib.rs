//! JSON front end for `tarski-core`: document parsing, canonical
//! serialization and the command implementations behind the `tarski` binary.

pub mod commands;
pub mod encode;
pub mod error;
pub mod parse;

pub use commands::{render, run, Command, Options, Outcome};
pub use error::CliError;
