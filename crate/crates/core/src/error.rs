use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid word at position {index}: {reason}")]
    InvalidWord { index: usize, reason: String },

    #[error("ordering is not induced by a reduced word: first failure at position {index}")]
    InvalidOrdering { index: usize },

    /// Gaussian elimination without pivoting met a vanishing leading principal minor.
    #[error("leading principal minor {index} vanishes")]
    Stratum { index: usize },

    /// A denominator of the rational inverse vanishes.
    #[error("exceptional set: factor {index} vanishes (value {value})")]
    Exceptional { index: usize, value: String },

    #[error("square root branch violated at pair {index}: {value} is not a positive rational")]
    Branch { index: usize, value: String },

    #[error("enumeration budget of {budget} words exceeded")]
    Budget { budget: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::InvalidWord { .. } => "invalid-word",
            Error::InvalidOrdering { .. } => "invalid-ordering",
            Error::Stratum { .. } => "stratum",
            Error::Exceptional { .. } => "exceptional-set",
            Error::Branch { .. } => "branch",
            Error::Budget { .. } => "budget",
            Error::Parse(_) => "parse",
        }
    }

    pub fn index(&self) -> Option<usize> {
        match self {
            Error::InvalidWord { index, .. }
            | Error::InvalidOrdering { index }
            | Error::Stratum { index }
            | Error::Exceptional { index, .. }
            | Error::Branch { index, .. } => Some(*index),
            _ => None,
        }
    }

    pub fn value(&self) -> Option<&str> {
        match self {
            Error::Exceptional { value, .. } | Error::Branch { value, .. } => Some(value),
            _ => None,
        }
    }

    /// Failures caused by the input lying on a degenerate locus rather than being malformed.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Error::Stratum { .. } | Error::Exceptional { .. })
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
