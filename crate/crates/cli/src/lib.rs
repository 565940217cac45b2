//! Command-line front end for `aldous-core`: argument handling, text and
//! JSON rendering, and binary matrix dumps.

pub mod cli;
pub mod dump;
pub mod report;

pub use cli::{run, Cli, Outcome};
