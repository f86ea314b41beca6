use thiserror::Error;

/// Library-level failure modes.
///
/// Exhausting the trial budget of a randomized constructor is *not* an error:
/// it is reported through [`crate::construct::Outcome::Exhausted`]. Errors are
/// reserved for inputs that violate a precondition and for computations that
/// would blow past a resource cap.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }
}
