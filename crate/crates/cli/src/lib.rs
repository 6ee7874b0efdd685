//! Library side of the `ringoid` command-line tool. Each command returns an
//! [`Outcome`]; the binary prints it and maps failures to the exit code.

pub mod check;
pub mod demo;
pub mod enumerate;
pub mod format;
pub mod reproduce;
pub mod scan;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
    #[error(
        "projected work {projected} exceeds the ceiling {ceiling}; rerun with --count-only \
         (or raise RINGOID_WORK_CEILING)"
    )]
    Ceiling { projected: u128, ceiling: u128 },
    #[error(transparent)]
    Core(#[from] ringoid_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// What a command produced: data for stdout, notes for stderr, and the
/// checks that failed (empty means success).
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub output: String,
    pub notes: String,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn ok(output: String) -> Self {
        Self {
            output,
            ..Self::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The machine-readable failure list written to stderr on a failed run.
    pub fn failure_report(&self) -> String {
        #[derive(Serialize)]
        struct Report<'a> {
            failures: &'a [String],
        }
        serde_json::to_string(&Report {
            failures: &self.failures,
        })
        .expect("strings serialize")
    }
}
