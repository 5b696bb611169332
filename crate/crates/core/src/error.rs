use thiserror::Error;

use crate::bijection::ClassKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("empty block")]
    EmptyBlock,
    #[error("element {0} appears more than once")]
    DuplicateElement(u32),
    #[error("element {0} is not a positive integer")]
    NonPositive(i64),
    #[error("element {0} does not fit in 32 bits")]
    Overflow(i64),
    #[error("partition has no blocks")]
    EmptyPartition,
    #[error("restriction leaves no elements")]
    EmptyResult,
    #[error("interval [{lo}, {hi}] is empty")]
    EmptyInterval { lo: u32, hi: u32 },
    #[error("ground set of `{0}` is not of the form [1, n]")]
    NotBasedAtOne(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{map} is defined only on {expected} partitions; `{input}` is {actual}")]
    Domain {
        map: &'static str,
        input: String,
        expected: ClassKind,
        actual: ClassKind,
    },
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
