//! Front end for the `wedd` binary: ring declarations, the expression
//! grammar, command dispatch and deterministic reports.

pub mod parse;
pub mod report;
pub mod run;

use thiserror::Error;

pub use parse::{parse_elem, parse_group, parse_matrix, parse_poly, parse_ring, parse_set};
pub use report::{Report, Status, Value};
pub use run::{execute, main_with, Cli};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] wedderburn::Error),
}

impl CliError {
    pub fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        CliError::Syntax { pos, msg: msg.into() }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Syntax { .. } => "E_SYNTAX",
            CliError::Usage(_) => "E_USAGE",
            CliError::Core(e) => e.code(),
        }
    }

    /// Offsets a syntax position when the source was a slice of a larger string.
    pub(crate) fn shift(self, by: usize) -> Self {
        match self {
            CliError::Syntax { pos, msg } => CliError::Syntax { pos: pos + by, msg },
            e => e,
        }
    }
}
