use thiserror::Error;

/// Everything that can go wrong while building or comparing terms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed braid word: {0}")]
    MalformedWord(String),

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("incomparable: {0}")]
    Incomparable(String),

    #[error("arity mismatch: expected {expected}, got {found}")]
    Arity { expected: usize, found: usize },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("invalid name: {0}")]
    InvalidName(String),

    #[error("cannot compose: {0}")]
    Composition(String),

    #[error("flavor mismatch: {0}")]
    Flavor(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("inconsistent block structure: {0}")]
    Structure(String),

    #[error("typing error at {path}: {message}")]
    Typing { path: String, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("interpretation error: {0}")]
    Interpretation(String),

    #[error("path error: {0}")]
    Path(String),
}

impl Error {
    /// Prefix the subterm path of a typing error (or turn another error into one).
    pub(crate) fn at(self, segment: &str) -> Error {
        match self {
            Error::Typing { path, message } => Error::Typing {
                path: if path.is_empty() {
                    segment.to_string()
                } else {
                    format!("{segment}.{path}")
                },
                message,
            },
            other => Error::Typing {
                path: segment.to_string(),
                message: other.to_string(),
            },
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
