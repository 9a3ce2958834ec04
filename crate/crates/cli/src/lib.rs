//! Library side of the `kappa` command-line tool.

pub mod app;
pub mod output;
pub mod parse;
pub mod table1;

pub use app::{run, Cli, CliError, Config, Outcome};
pub use parse::{parse_group_spec, ParseError};
