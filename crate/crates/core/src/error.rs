use thiserror::Error;

/// Errors raised by the jet-bound computations and the descriptor front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parity violation: k^2*L^2 - k*L.K is odd at k = {k} (L^2 = {l2}, L.K = {l_dot_k})")]
    ParityViolation { k: u64, l2: u64, l_dot_k: i64 },

    #[error("cannot parse rational {0:?}: expected \"p/q\" or \"p\"")]
    ParseRational(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("unknown catalog id {0:?}")]
    UnknownCatalogId(String),

    #[error("descriptor: {0}")]
    Descriptor(String),

    #[error("record {id:?} failed validation: {reasons}")]
    Validation { id: String, reasons: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
