use std::fmt;

use nichols_core::Error;

/// Process exit codes.
pub const OK: i32 = 0;
pub const VERIFY_FAILED: i32 = 1;
pub const USAGE: i32 = 2;
pub const PARSE: i32 = 3;
pub const BUDGET: i32 = 4;
pub const IO: i32 = 5;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Parse(String),
    Io(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => USAGE,
            Failure::Parse(_) => PARSE,
            Failure::Io(_) => IO,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownFamily(_) | Error::Parameter(_) | Error::UnsupportedOrder(_) => Failure::Usage(e.to_string()),
            _ => Failure::Parse(e.to_string().trim_start_matches("parse error: ").to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, Failure>;
