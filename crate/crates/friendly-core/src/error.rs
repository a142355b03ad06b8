use thiserror::Error;

/// Crate-wide error type. Messages are single-line so the CLI can forward
/// them verbatim as its one-line diagnostics.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input document, with a 1-indexed line number.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A constructor was asked for an object that cannot exist.
    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    /// A documented precondition does not hold for the given arguments.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A degree sequence or completion is not realizable.
    #[error("realization error: {0}")]
    Realization(String),

    /// A heuristic search exhausted its restarts without a witness.
    /// This never stands in for a proof of nonexistence.
    #[error("search failed: {0}")]
    SearchFailed(String),

    /// An explicit budget (node cap, retry cap) ran out; the answer is
    /// indeterminate.
    #[error("budget exhausted: {0}")]
    Budget(String),

    /// A pipeline stage could not meet its obligation.
    #[error("stage {stage} failed: {detail}")]
    Stage { stage: &'static str, detail: String },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidSpec(msg.into())
    }
}
