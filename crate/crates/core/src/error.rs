use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent user input.
    #[error("input error: {0}")]
    Input(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Path enumeration of a quiver presentation did not terminate.
    #[error("not finite-dimensional: {0}")]
    NotFiniteDimensional(String),

    /// The algebra lacks data (radical, idempotents) that an operation needs.
    #[error("unsupported algebra: {0}")]
    Unsupported(String),

    /// A resolution was truncated before the requested degree.
    #[error("degree bound {bound} exceeded while computing {what}")]
    BoundExceeded { what: String, bound: usize },

    /// A Gorenstein profile is required but could not be verified.
    #[error("unverified Gorenstein profile: {0}")]
    Unverified(String),

    /// A construction produced an object violating its postconditions.
    #[error("construction failed: {0}")]
    Construction(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
