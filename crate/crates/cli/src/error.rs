use std::fmt;

use corelab_core::EngineError;

/// Errors surfaced by the command-line layer, split by who is at fault:
/// `Usage` (bad invocation or unparsable input, exit 3) versus `Engine`
/// (the computation itself failed or refused, exit 2).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Engine(EngineError),
    Io(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    /// An engine error raised while *constructing* inputs is the caller's
    /// problem, not the engine's.
    pub fn usage_from(err: EngineError) -> Self {
        CliError::Usage(err.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 3,
            CliError::Engine(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Engine(e) => write!(f, "engine error: {e}"),
            CliError::Io(m) => write!(f, "io error: {m}"),
        }
    }
}

impl From<EngineError> for CliError {
    fn from(err: EngineError) -> Self {
        CliError::Engine(err)
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
