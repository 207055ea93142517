use std::fmt;

use crate::input::ParseError;

/// Failure of a CLI run, mapped to the process exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(ParseError),
    Compute(cfgen_core::Error),
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 1,
            CliError::Compute(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse(e) => e.fmt(f),
            CliError::Compute(e) => write!(f, "computation error: {e}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<cfgen_core::Error> for CliError {
    fn from(e: cfgen_core::Error) -> Self {
        CliError::Compute(e)
    }
}
