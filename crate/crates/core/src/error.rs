use thiserror::Error;

use crate::root_data::LieType;

/// Every failure the library can report.
///
/// Verification-style failures (`NotDivisible` during a Casimir
/// construction, `SingularLeadingCoefficient`, `CertificateFailed`) are
/// surfaced unchanged so that callers can report them as failed identities.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("evaluation base must be nonzero")]
    ZeroBase,
    #[error("type {lie_type} needs rank at least {min}, got {rank}")]
    RankTooSmall {
        lie_type: LieType,
        rank: usize,
        min: usize,
    },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("index {index} out of range {range}")]
    IndexOutOfRange { index: i64, range: String },
    #[error("the barred hook weight only exists in type D with r = n - 1")]
    BarNotApplicable,
    #[error("operation requires type {expected}, got {actual}")]
    WrongType { expected: LieType, actual: LieType },
    #[error("rank {rank} exceeds the Weyl group enumeration limit {limit}")]
    RankTooLargeForEnumeration { rank: usize, limit: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("evaluation point does not match the weight grid: {0}")]
    GridMismatch(String),
    #[error("degenerate evaluation: {0}")]
    DegenerateEvaluation(String),
    #[error("partition {partition} has more than {rank} parts")]
    PartitionTooLong { partition: String, rank: usize },
    #[error("halving the Jacobi-Trudi determinant left an odd coefficient at {0}")]
    HalvingFailed(String),
    #[error("leading coefficient of g_{0} in the e-basis vanishes")]
    SingularLeadingCoefficient(usize),
    #[error("generation certificate failed: {0}")]
    CertificateFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
