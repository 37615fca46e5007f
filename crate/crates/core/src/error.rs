use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An input exceeded a configured size guard.
    #[error("resource limit exceeded: {what} = {value} exceeds limit {limit}")]
    ResourceLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    /// An operation was called outside of its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The requested quantity is undefined for the given arguments.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),

    /// The graph has fewer than two k-colorings.
    #[error("graph is not ambiguously {k}-colorable")]
    NotAmbiguous { k: usize },

    /// Matrix reconstruction could not produce a desirable certificate.
    #[error("reconstruction failed: {0}")]
    ConstructionFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_limit(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::ResourceLimit { what, value, limit })
    } else {
        Ok(())
    }
}
