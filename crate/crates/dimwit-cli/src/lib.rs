//! File formats and output helpers behind the `dimwit` binary.

pub mod formats;
pub mod numfmt;

use std::fmt;
use std::path::PathBuf;

/// Errors surfaced by the CLI, mapped to exit codes: size-guard failures exit
/// with 2, everything else with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(PathBuf, std::io::Error),
    Parse(PathBuf, String),
    Core(dimwit_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(dimwit_core::Error::SizeExceeded { .. }) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(path, err) => write!(f, "{}: {err}", path.display()),
            CliError::Parse(path, msg) => write!(f, "{}: {msg}", path.display()),
            CliError::Core(err) => write!(f, "{err}"),
        }
    }
}

impl From<dimwit_core::Error> for CliError {
    fn from(err: dimwit_core::Error) -> Self {
        CliError::Core(err)
    }
}
