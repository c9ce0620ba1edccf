use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A ring constructor received parameters it cannot build a ring from.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An operation received arguments outside its domain (wrong ring,
    /// non-idempotent projection, missing exponent, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The element does not satisfy the predicate the operation requires.
    #[error("precondition violated ({method}): {detail}")]
    PreconditionViolation { method: String, detail: String },

    /// Two characterizations of the same predicate disagreed on an element.
    #[error("methods disagree on element {element}: {detail}")]
    MethodDisagreement { element: String, detail: String },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("element literal does not match ring {ring}: {msg}")]
    ElementMismatch { ring: String, msg: String },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("unknown system id `{0}`")]
    UnknownSystem(String),

    /// A guarded exhaustive check would exceed its carrier limit.
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
}

impl Error {
    pub(crate) fn precondition(method: &str, detail: impl Into<String>) -> Self {
        Error::PreconditionViolation {
            method: method.to_string(),
            detail: detail.into(),
        }
    }
}
