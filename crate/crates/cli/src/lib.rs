//! Library side of the `unproj` command-line tool.
//!
//! [`commands`] holds the work behind each subcommand and [`export`] the
//! renderers for plain text, JSON, Macaulay2 and Singular output.

pub mod commands;
pub mod error;
pub mod export;

pub use error::{CliError, Result};
pub use export::{ExportBundle, Format, OPEN_MARKER};
