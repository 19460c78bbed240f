use thiserror::Error;

pub type Result<T, E = ClusterError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClusterError {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("cluster {cluster} is empty")]
    EmptyCluster { cluster: usize },

    #[error("empty point set")]
    EmptyInput,

    #[error("non-finite coordinate at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },

    #[error("label {label} at row {row} is out of range for k={k}")]
    LabelOutOfRange { row: usize, label: usize, k: usize },

    #[error("window width {width} invalid for {len} values")]
    Width { width: usize, len: usize },

    #[error("domain error: {0}")]
    Domain(String),
}
