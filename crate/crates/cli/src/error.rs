//! Command errors carrying their process exit code.

use core::fmt;

/// Exit code 2 for usage and parse problems, 1 for physics and numerics.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Malformed invocation, unreadable or unparseable input: exit 2.
    Usage(String),
    /// Physically invalid states or failed computations: exit 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message())
    }
}

impl std::error::Error for CliError {}

impl From<gaussbound_core::Error> for CliError {
    fn from(e: gaussbound_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
