use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("braid is not pure")]
    NotPure,

    #[error("invalid type vector: {0}")]
    InvalidType(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("braid is not woven of the requested type")]
    NotWoven,

    #[error("conjugating braid is not in K_n")]
    NotInKn,

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("resource cap exceeded: {what} (limit {limit})")]
    ResourceCap { what: &'static str, limit: usize },

    #[error("table data integrity failure: {0}")]
    Integrity(String),
}

impl Error {
    pub fn cap(what: &'static str, limit: usize) -> Self {
        Error::ResourceCap { what, limit }
    }
}
