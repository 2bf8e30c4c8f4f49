use thiserror::Error;

/// Every failure the library reports. The `code()` names are stable and
/// are what the CLI prints on bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("REJECT_NEGATIVE: h({index}) = {value} is negative")]
    RejectNegative { index: usize, value: i64 },
    #[error(
        "REJECT_INITIAL_RAMP: h({index}) = {value}, expected {expected} before the first deficit"
    )]
    RejectInitialRamp {
        index: usize,
        value: i64,
        expected: i64,
    },
    #[error("REJECT_NOT_MONOTONE: h({index}) = {value} exceeds h({prev}) = {prev_value}", prev = index - 1)]
    RejectNotMonotone {
        index: usize,
        value: i64,
        prev_value: i64,
    },
    #[error("PARSE: cannot read {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("INVALID_LAMBDA: {0}")]
    InvalidLambda(String),
    #[error("EMPTY_LAMBDA: operation needs a non-empty biliaison type")]
    EmptyLambda,
    #[error("NOT_S_MINIMAL: {lambda} has an entry >= s = {s}")]
    NotSMinimal { lambda: String, s: i64 },
    #[error("NOT_ORDERED: {left} does not precede {right}")]
    NotOrdered { left: String, right: String },
    #[error("NOT_LINKABLE: {0}")]
    NotLinkable(String),
    #[error("NOT_INTEGRAL: (d, g, s) = ({d}, {g}, {s}) gives a non-integral self-intersection")]
    NotIntegral { d: i64, g: i64, s: i64 },
    #[error("OUT_OF_RANGE: {0}")]
    OutOfRange(String),
    #[error("S_TOO_SMALL: s = {0} <= 3 is not covered")]
    STooSmall(i64),
    #[error("CASE_MISMATCH: {0}")]
    CaseMismatch(String),
    #[error("DELTA_NOT_POSITIVE: Delta = {delta} at k = {k}, instability does not apply")]
    DeltaNotPositive { delta: i64, k: i64 },
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::RejectNegative { .. } => "REJECT_NEGATIVE",
            Error::RejectInitialRamp { .. } => "REJECT_INITIAL_RAMP",
            Error::RejectNotMonotone { .. } => "REJECT_NOT_MONOTONE",
            Error::Parse { .. } => "PARSE",
            Error::InvalidLambda(_) => "INVALID_LAMBDA",
            Error::EmptyLambda => "EMPTY_LAMBDA",
            Error::NotSMinimal { .. } => "NOT_S_MINIMAL",
            Error::NotOrdered { .. } => "NOT_ORDERED",
            Error::NotLinkable(_) => "NOT_LINKABLE",
            Error::NotIntegral { .. } => "NOT_INTEGRAL",
            Error::OutOfRange(_) => "OUT_OF_RANGE",
            Error::STooSmall(_) => "S_TOO_SMALL",
            Error::CaseMismatch(_) => "CASE_MISMATCH",
            Error::DeltaNotPositive { .. } => "DELTA_NOT_POSITIVE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
