use std::fmt;

use symcc::polycore::PolyError;
use symcc::repr::ReprError;
use symcc::symfun::SymError;
use symcc::topo::TopoError;

/// Failures, split by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad input or unmet precondition (exit 2).
    Usage(String),
    /// A checked mathematical statement failed (exit 3).
    Assertion(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Assertion(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Assertion(m) => write!(f, "assertion failed: {m}"),
        }
    }
}

impl From<TopoError> for CliError {
    fn from(e: TopoError) -> Self {
        if e.is_assertion() {
            CliError::Assertion(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

macro_rules! usage_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Usage(e.to_string())
            }
        }
    )*};
}

usage_from!(PolyError, SymError, ReprError, std::io::Error);
