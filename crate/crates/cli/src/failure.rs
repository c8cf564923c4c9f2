use std::fmt;

use selfsim_core::Error;

/// A failed run, classified by exit status.
#[derive(Debug)]
pub enum Failure {
    /// Arguments make no sense for this system (exit 2, like clap).
    Usage(String),
    /// An input file or certificate could not be read or parsed (exit 3).
    Parse(String),
    /// The run would exceed a configured size limit (exit 4).
    Limit(String),
    /// A result failed its own re-verification (exit 5).
    Invariant(String),
    /// Writing output failed (exit 1).
    Io(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Parse(_) => 3,
            Failure::Limit(_) => 4,
            Failure::Invariant(_) => 5,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "{m}"),
            Failure::Parse(m) => write!(f, "input error: {m}"),
            Failure::Limit(m) => write!(f, "refusing: {m}"),
            Failure::Invariant(m) => write!(f, "verification failed: {m}"),
            Failure::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Parse { .. } | Error::Unsupported { .. } => Failure::Parse(msg),
            Error::SizeLimit { .. } | Error::Overflow(_) => Failure::Limit(msg),
            _ => Failure::Usage(msg),
        }
    }
}
