use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid code symbol {0:?}, expected U or R")]
    InvalidCode(char),

    #[error("weight mismatch: |{left}| = {left_weight} but |{right}| = {right_weight}")]
    WeightMismatch {
        left: Partition,
        right: Partition,
        left_weight: usize,
        right_weight: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("output weight {weight} exceeds max weight {max_weight}")]
    TruncationOverflow { weight: usize, max_weight: usize },

    #[error("coefficient of {partition} lies beyond truncation weight {truncation}")]
    NotEvaluable {
        partition: Partition,
        truncation: usize,
    },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
