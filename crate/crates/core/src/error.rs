use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("period {0} is smaller than 2")]
    BadPeriod(i64),
    #[error("genus {0} is negative")]
    NegativeGenus(i64),
    #[error("signature is not hyperbolic: Euler characteristic {chi} is not negative")]
    NonHyperbolic { chi: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),
    #[error("invalid classical group: {0}")]
    InvalidGroup(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("fixed-point data does not match the period list: {0}")]
    MismatchedPeriods(String),
    #[error("cocycle dimension is not an integer: {0}")]
    NonIntegerResult(String),
    #[error("generator {index} has order {found}, expected period {expected}")]
    OrderMismatch {
        index: usize,
        expected: u64,
        found: u64,
    },
    #[error("no {d}-cycle fits on {points} points")]
    NoBalancedClass { points: u64, d: u64 },
    #[error("triple ({0}, {1}, {2}) is not hyperbolic")]
    NotHyperbolicTriple(u64, u64, u64),
    #[error("value out of range: {0}")]
    OutOfRange(String),
}
