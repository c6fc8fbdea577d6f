use thiserror::Error;

/// Errors produced anywhere in the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6{}: {reason}", line.map(|l| format!(" on line {l}")).unwrap_or_default())]
    MalformedGraph6 { line: Option<usize>, reason: String },

    #[error("too large: {0}")]
    TooLarge(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("graph contains K_{k}")]
    NotKkFree { k: usize },

    #[error("no m satisfies the selection rule with the available extremal values")]
    NoValidM,

    #[error("procedure exceeded its step cap of {cap}")]
    NonTermination { cap: usize },

    #[error("pair is degenerate for this operation: chi(h) = {chi_h} >= chi(f) = {chi_f}")]
    DegeneratePair { chi_h: usize, chi_f: usize },

    #[error("missing extremal value ex({n}, h, f)")]
    MissingValue { n: usize },

    #[error("stream record on line {line} has {found} vertices, expected {expected}")]
    StreamMismatch { line: usize, expected: usize, found: usize },

    #[error("catalog line {line}: {reason}")]
    CatalogFormat { line: usize, reason: String },

    #[error("i/o failure: {0}")]
    IoFailure(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable name, used on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Error::MalformedGraph6 { .. } => "MalformedGraph6",
            Error::TooLarge(_) => "TooLarge",
            Error::Overflow(_) => "Overflow",
            Error::NotKkFree { .. } => "NotKkFree",
            Error::NoValidM => "NoValidM",
            Error::NonTermination { .. } => "NonTermination",
            Error::DegeneratePair { .. } => "DegeneratePair",
            Error::MissingValue { .. } => "MissingValue",
            Error::StreamMismatch { .. } => "StreamMismatch",
            Error::CatalogFormat { .. } => "CatalogFormat",
            Error::IoFailure(_) => "IoFailure",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }

    pub(crate) fn malformed(reason: impl Into<String>) -> Self {
        Error::MalformedGraph6 {
            line: None,
            reason: reason.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::IoFailure(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
