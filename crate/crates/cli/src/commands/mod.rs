mod constants;
mod converge;
mod identities;
mod orbit;
mod tables;
mod visible;

pub use constants::constants;
pub use converge::converge;
pub use identities::identities;
pub use orbit::orbit;
pub use tables::tables;
pub use visible::visible;

use std::error::Error;
use std::fmt;

use crate::output::Output;

/// Deliberately not an `Error` itself, so any error converts into it with `?`.
#[derive(Debug)]
pub enum CmdError {
    /// Arguments that parse but make no sense together.
    Usage(String),
    Runtime(Box<dyn Error + Send + Sync>),
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmdError::Usage(m) => f.write_str(m),
            CmdError::Runtime(e) => e.fmt(f),
        }
    }
}

impl<E: Error + Send + Sync + 'static> From<E> for CmdError {
    fn from(e: E) -> Self {
        CmdError::Runtime(Box::new(e))
    }
}

pub type CmdResult = Result<Output, CmdError>;
