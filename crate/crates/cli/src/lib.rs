//! Library side of the `exg` command-line tool.

pub mod args;
pub mod input;
pub mod report;

mod commands;

use std::io::Write;
use std::path::Path;

use exg_core::ExgError;
use thiserror::Error;

pub use commands::run;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input: {0}")]
    Input(String),
    #[error("numerical failure: {0}")]
    Numerical(#[from] ExgError),
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Numerical(_) => 4,
            CliError::Output(_) => 1,
        }
    }
}

/// Thread count requested through `EXG_THREADS`, if any.
pub fn threads_from_env() -> Result<Option<usize>, CliError> {
    match std::env::var("EXG_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!(
                "EXG_THREADS must be a positive integer, got {v:?}"
            ))),
        },
        Err(_) => Ok(None),
    }
}

pub(crate) fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Output(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Output(e.to_string()))
        }
    }
}
