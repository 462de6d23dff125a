//! Command-line front end over the library: problem files, reports and subcommands.

mod commands;
mod problem;
mod report;

use thiserror::Error;

pub use commands::*;
pub use problem::{GammaSpec, ProblemFile, SetSpec, WitnessSpec, PAPER_900, PAPER_900_NAME};
pub use report::{listing, ReportDocument, Status, ELIDE_ABOVE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Input(String),
}
