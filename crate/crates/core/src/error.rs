use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("malformed scalar {text:?}: {reason}")]
    Scalar { text: String, reason: String },
    #[error("invalid algebra data: {0}")]
    InvalidData(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("not invariant: {0}")]
    NotInvariant(String),
    #[error("isomorphism search undecided: hom space has dimension {0}, above the cap of 8")]
    Undecided(usize),
    #[error("dimension cap exceeded: dim {dim} > cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
    #[error("inconsistent computation: {0}")]
    Inconsistent(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// Stable identifier used in machine reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "dimension",
            Error::FieldMismatch(..) => "field_mismatch",
            Error::InvalidField(_) => "invalid_field",
            Error::Scalar { .. } => "scalar",
            Error::InvalidData(_) => "invalid_data",
            Error::Parse { .. } => "parse",
            Error::Io(_) => "io",
            Error::NotInvariant(_) => "not_invariant",
            Error::Undecided(_) => "undecided",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::Inconsistent(_) => "inconsistent",
            Error::Unsupported(_) => "unsupported",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
