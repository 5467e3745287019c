use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("measurement matrix is degenerate: {0}")]
    DegenerateInput(String),

    #[error("similarity graph is disconnected: node {node} has zero degree")]
    Disconnected { node: usize },

    #[error("eigenvector index {index} out of range (valid: 1..={max})")]
    EigenvectorOutOfRange { index: usize, max: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("anchor coordinate in column {column} is within the noise floor of zero; pick a node with unambiguous coordinates")]
    AmbiguousAnchor { column: usize },

    #[error("orientation search over {k} embedding columns would need 2^{k} matchings; supply an anchor instead")]
    TooManyOrientations { k: usize },

    #[error("coincident nodes {a} and {b}: zero distance cannot be converted to RSSI")]
    CoincidentNodes { a: usize, b: usize },

    #[error("measurement for pair ({a}, {b}) is missing; a dense matrix over all pairs is required")]
    MissingPair { a: String, b: String },

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
