use thiserror::Error;

/// Errors surfaced by the library's fallible operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("weight mismatch: weight sums to {got}, instance requires {expected}")]
    WeightMismatch { expected: usize, got: usize },

    #[error("cospin is undefined on an empty tableau class")]
    EmptyClass,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("{0:?} is not a {1}-core: it admits a {1}-ribbon removal")]
    NotACore(crate::partition::Partition, usize),

    #[error("operation requires a tuple of weakly increasing single-row shapes")]
    NonRowTuple,

    #[error("operation requires a partition (weakly decreasing) weight")]
    NonPartitionWeight,

    #[error("degree {requested} exceeds the configured budget {budget}")]
    DegreeBudget { requested: usize, budget: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
