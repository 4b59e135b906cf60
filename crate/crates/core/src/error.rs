use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition weight {weight} exceeds the supported maximum {max}")]
    WeightTooLarge { weight: u64, max: u64 },

    #[error("cannot parse partition {input:?}: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("weight triple ({w1}, {w2}, {w3}) must satisfy w1 > 0 and w3 > w2 - w1 > 0")]
    InvalidWeightTriple { w1: i64, w2: i64, w3: i64 },

    #[error("empty l-window: l_min = {l_min} > l_max = {l_max}")]
    EmptyWindow { l_min: i64, l_max: i64 },

    #[error("degree of the framing bundle must be 0 or 1, got {0}")]
    InvalidFramingDegree(i64),

    #[error("fiber degree F must be <= 0, got {0}")]
    PositiveFiberDegree(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
