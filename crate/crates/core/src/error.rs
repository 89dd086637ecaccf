use thiserror::Error;

/// Errors produced by the analyses in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input violated an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration or search would exceed its configured cap.
    #[error("resource limit exceeded: {what} needs {needed}, cap is {cap}")]
    Resource { what: &'static str, needed: u128, cap: u128 },

    /// Malformed graph or plan text.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The witness construction was asked for a graph whose corefan is too small.
    #[error("corefan is {corefan}, which does not exceed t = {t}")]
    CorefanTooSmall { corefan: u32, t: u32 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, message: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
