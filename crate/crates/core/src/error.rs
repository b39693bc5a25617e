use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition {text:?}: {reason}")]
    MalformedPartition { text: String, reason: String },

    #[error("operation requires a nonempty partition")]
    EmptyPartition,

    #[error("removal size {q} exceeds partition size {size}")]
    SizeOutOfRange { q: usize, size: usize },

    #[error("row index {index} out of range 1..={length}")]
    IndexOutOfRange { index: usize, length: usize },

    #[error("{what} of size {n} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("block list is empty")]
    EmptyBlockList,

    #[error("row {index} of {lambda} has no overhang (lambda_i = lambda_(i+1))")]
    ZeroGap { lambda: String, index: usize },

    #[error("{j:?} is not a rearrangement of the parts of {gamma}")]
    InvalidComposition { gamma: String, j: Vec<usize> },

    #[error("sample points must be distinct and nonzero")]
    DegenerateSample,

    #[error("malformed scalar {text:?}: {reason}")]
    MalformedScalar { text: String, reason: String },

    #[error("matrix schema error{}: {reason}", location_suffix(.location))]
    Schema {
        location: Option<(usize, usize)>,
        reason: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

fn location_suffix(location: &Option<(usize, usize)>) -> String {
    match location {
        Some((row, col)) => format!(" at row {row}, column {col}"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn malformed_partition(text: &str, reason: impl Into<String>) -> Self {
        Error::MalformedPartition {
            text: text.to_string(),
            reason: reason.into(),
        }
    }

    pub(crate) fn schema(location: Option<(usize, usize)>, reason: impl Into<String>) -> Self {
        Error::Schema {
            location,
            reason: reason.into(),
        }
    }
}
