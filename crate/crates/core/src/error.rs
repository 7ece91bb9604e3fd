//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by the verification toolkit.
///
/// The variants mirror how the CLI maps failures to exit codes: parse,
/// domain and precondition errors are usage problems, while `Resource`
/// means a configured budget was exceeded and the computation refused to
/// start (or to continue) rather than degrade silently.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the operation's domain (wrong degree, shape
    /// mismatch, unsupported parameters, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A stated precondition does not hold for the given values.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An enumeration or search budget would be exceeded.
    #[error("budget exceeded: {0}")]
    Resource(String),

    /// A text input could not be parsed. `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Declared constraints contradict each other at build time.
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
