use thiserror::Error;

/// Errors raised by the combinatorics, the Fock space operators and the
/// two canonical-basis engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: expected {expected} components, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid charge: {0}")]
    InvalidCharge(String),

    #[error("node {node} is not {kind} for {label}")]
    InvalidNode {
        node: String,
        kind: &'static str,
        label: String,
    },

    #[error("cannot truncate a multipartition with a single component")]
    TruncateRankOne,

    #[error("{label} is not {e}-regular")]
    NotRegular { label: String, e: u32 },

    #[error("division is not exact: ({numerator}) / ({denominator})")]
    InexactDivision {
        numerator: String,
        denominator: String,
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("truncation length {length} too small (need at least {needed})")]
    TruncationTooShort { length: usize, needed: usize },

    #[error("wedge is not the image of any multipartition: {0}")]
    Undecodable(String),

    #[error("e-stability check failed for {label}: results differ at e={e1} and e={e2}")]
    Unstable { label: String, e1: u32, e2: u32 },

    #[error("argument outside the domain: {0}")]
    OutOfDomain(String),

    #[error("contexts differ: {0}")]
    ContextMismatch(String),

    /// An invariant guaranteed by the theory failed at runtime.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
