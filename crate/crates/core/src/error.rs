//! Error taxonomy shared by the whole crate.
//!
//! The variants matter to callers: the CLI maps [`Error::InvariantViolation`]
//! to exit status 3 (a claim the library asserts about every input was
//! falsified at run time, the strongest signal the tool can emit) and every
//! other variant to exit status 2.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied parameter is out of range or inconsistent.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Malformed input text; `offset` is the byte offset (or line number for
    /// line-oriented streams, see the message) at which parsing failed.
    #[error("format error at byte {offset}: {msg}")]
    Format { msg: String, offset: usize },

    /// A configurable cap was exceeded; the message names the fallback.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// The operation only applies to targets in a specific regime and the
    /// given target is not in it.
    #[error("regime precondition not met: {0}")]
    Regime(String),

    /// A structural fact the library guarantees for all valid inputs failed
    /// to hold. Reaching this is reportable: either the input violated a
    /// documented precondition undetected, or a theorem-backed assertion is
    /// wrong at desk scale.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// An ear-decomposition rebuild step broke an attachment rule.
    #[error("construction error: {0}")]
    Construction(String),

    /// Requested functionality is deliberately not provided.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An internal safety cap fired; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit status the CLI should use for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvariantViolation(_) => 3,
            _ => 2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Error::Parameter("x".into()).exit_code(), 2);
        assert_eq!(
            Error::Format {
                msg: "x".into(),
                offset: 0
            }
            .exit_code(),
            2
        );
        assert_eq!(Error::InvariantViolation("x".into()).exit_code(), 3);
    }
}
