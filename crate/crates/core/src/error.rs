use thiserror::Error;

/// Errors raised by the library. Verification outcomes are never errors;
/// they are carried in reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quandle order must be at least 1")]
    ZeroOrder,

    #[error("table entry {value} at ({row}, {col}) is out of range for order {n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("table is not square: row {row} has {len} entries, expected {n}")]
    RaggedTable { row: usize, len: usize, n: usize },

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("enumeration guard: n = {n} exceeds the limit of {limit}")]
    EnumerationGuard { n: usize, limit: usize },

    #[error("the affine fast path requires a dihedral quandle")]
    NotDihedral,

    #[error("not a permutation of 0..{n}: {images:?}")]
    NotAPermutation { n: usize, images: Vec<usize> },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("work limit exceeded: {needed} units requested, limit {limit}")]
    WorkLimit { needed: u128, limit: u128 },

    #[error("pair budget of {budget} exhausted during Buchberger")]
    PairBudget { budget: usize },

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
