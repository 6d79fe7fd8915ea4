use thiserror::Error;

use crate::word::{MAX_LEN, MAX_PAYLOAD};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SortError {
    #[error("cannot take the minimum of an empty list")]
    Empty,
    #[error("list of {len} words exceeds the {MAX_LEN}-word limit")]
    TooLong { len: usize },
    #[error("value {value} at index {index} exceeds the payload bound {MAX_PAYLOAD}")]
    ValueOutOfRange { index: usize, value: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaselineError {
    #[error("value range {range} exceeds the counting table cap of {cap} entries")]
    RangeTooLarge { range: u128, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WorkloadError {
    #[error("unknown workload kind `{0}`")]
    UnknownKind(String),
    #[error("malformed workload token `{0}`, expected kind:n:m:seed[:rate]")]
    MalformedToken(String),
    #[error("range width m must be at least 1 for {0} workloads")]
    ZeroRange(&'static str),
    #[error("range width {m} exceeds the payload range")]
    RangeTooWide { m: u64 },
    #[error("geometric rate must be positive and finite, got {0}")]
    InvalidRate(f64),
    #[error("length {0} exceeds the supported list length")]
    TooLong(usize),
}
