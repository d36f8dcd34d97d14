//! Library side of the `pursuit` command-line tool: graph and manifest
//! parsing, command implementations, and result serialization. The binary in
//! `main.rs` is a thin wrapper over [`run`].

#![forbid(unsafe_code)]

pub mod commands;
pub mod error;
pub mod graph_file;
pub mod manifest;

pub use commands::run;
pub use error::CliError;
