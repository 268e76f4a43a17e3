//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is not supported for type {tag}: {reason}")]
    UnsupportedType {
        tag: String,
        rank: usize,
        reason: String,
    },
    #[error("partition {partition} is not admissible for {tag}: {reason}")]
    InadmissiblePartition {
        tag: String,
        partition: String,
        reason: String,
    },
    #[error("generator index {index} out of range for {tag}")]
    IndexOutOfRange { tag: String, index: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("factored polynomial is not a polynomial: factor (t^{exponent} {sign} 1) does not divide exactly")]
    NonPolynomialQuotient { exponent: u64, sign: char },
    #[error("root of (t^{exponent} {sign} 1) is not an m-th root of unity for m = {modulus}")]
    RootNotUnity {
        exponent: u64,
        sign: char,
        modulus: u64,
    },
    #[error("element order exceeded cap {cap}")]
    OrderCapExceeded { cap: u64 },
    #[error("sigma list entry {numerator}/{denominator} is not an integer")]
    NonIntegerEntry { numerator: u64, denominator: u64 },
    #[error("negative Kac label at node {node}")]
    NegativeLabel { node: usize },
    #[error("all Kac labels are zero")]
    AllZeroLabels,
    #[error("characteristic polynomial has a non-real coefficient at degree {degree}")]
    NonRealCoefficient { degree: usize },
    #[error("root-removal recovery stuck with {remaining} roots left, expected {expected}")]
    RecoveryStuck { remaining: usize, expected: usize },
    #[error("characteristic polynomial mismatch ({context}): first differing coefficient at degree {degree}")]
    MismatchDetected { context: String, degree: usize },
    #[error("cannot parse diagram: {0}")]
    ParseFailed(String),
    #[error("Weyl group rank {rank} exceeds brute-force cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    #[error("lift of {partition} in {tag} is not elliptic in the Weyl group")]
    NotElliptic { tag: String, partition: String },
}

pub type Result<T> = std::result::Result<T, Error>;
