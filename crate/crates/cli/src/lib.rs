//! File formats and subcommands behind the `laclust` binary.

pub mod commands;
pub mod io;
pub mod report;

pub use commands::{execute, Cli};
pub use io::{parse_labels, parse_points, write_labels, write_points, CliError};
pub use report::emit_report;
