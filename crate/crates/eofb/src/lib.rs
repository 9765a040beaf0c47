//! File formats, parallel search drivers and the `eofb` command line.

pub mod cli;
pub mod ensemble;
pub mod error;
pub mod format;
pub mod parallel;
pub mod verify;

pub use error::{exit, CliError};
