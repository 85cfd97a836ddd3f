use thiserror::Error;

/// Failure modes shared by every operation in the crate.
///
/// The variants map onto distinct CLI exit codes, so keep them coarse.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// The input is the zero seed or otherwise collapses to a point.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// A bounded search ran out of candidates.
    #[error("not found: {0}")]
    NotFound(String),
    /// An identity that must hold did not. Always a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn not_found(msg: impl Into<String>) -> Self {
        Error::NotFound(msg.into())
    }
}

/// Returns `Error::Internal` unless `cond` holds.
macro_rules! ensure_identity {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Internal(format!($($fmt)+)));
        }
    };
}
pub(crate) use ensure_identity;
