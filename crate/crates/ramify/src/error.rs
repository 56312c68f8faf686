use thiserror::Error;

/// Errors shared across the library.
///
/// The variants mirror the failure modes of the classification pipeline:
/// bad arguments, inputs outside an operation's domain, inputs rejected as
/// reducible or unverifiable, unsupported parameter combinations, internal
/// consistency checks that fired, and oracle searches that ran out of
/// precision.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no inverse of {a} modulo {n}: arguments are not coprime")]
    NoInverse { a: String, n: String },

    #[error("Newton criterion not satisfied: no lift from this seed")]
    NoLift,

    #[error("rejected input: {0}")]
    Rejected(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("inconclusive after search depth {0}: raise precision and retry")]
    Inconclusive(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
