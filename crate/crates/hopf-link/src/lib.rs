//! File formats, reports, quiver export and corpus management for the
//! `hopf-link` command-line tool.

use std::fmt;

pub mod analysis;
pub mod corpus;
pub mod dot;
pub mod format;
pub mod generate;

#[derive(Debug)]
pub enum CliError {
    Parse { line: usize, column: usize, message: String },
    Schema(String),
    Usage(String),
    Io(String),
    Engine(hopf_link_core::Error),
}

impl CliError {
    pub(crate) fn schema(msg: impl Into<String>) -> Self {
        CliError::Schema(msg.into())
    }

    pub(crate) fn from_json(e: serde_json::Error) -> Self {
        CliError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

impl From<hopf_link_core::Error> for CliError {
    fn from(e: hopf_link_core::Error) -> Self {
        CliError::Engine(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { line, column, message } => {
                write!(f, "parse error at line {}, column {}: {}", line, column, message)
            }
            CliError::Schema(m) => write!(f, "schema error: {}", m),
            CliError::Usage(m) => write!(f, "{}", m),
            CliError::Io(m) => write!(f, "io error: {}", m),
            CliError::Engine(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for CliError {}
