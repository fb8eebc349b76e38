use thiserror::Error;

use crate::order::MatrixType;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {n} is not admissible for {mtype}: {reason}")]
    InadmissibleOrder {
        n: usize,
        mtype: MatrixType,
        reason: String,
    },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("operation requires a {expected} matrix, got {found}")]
    WrongType {
        expected: MatrixType,
        found: MatrixType,
    },

    #[error("designs are only defined for the standard sign convention")]
    WrongConvention,

    /// The order is admissible but the closed-form results do not apply
    /// (the even prime 2 for Type I).
    #[error("order {n} is degenerate for {mtype}: {reason}")]
    DegenerateOrder {
        n: usize,
        mtype: MatrixType,
        reason: String,
    },

    #[error("degenerate design from order {n}: {reason}")]
    DegenerateDesign { n: usize, reason: String },

    #[error("order {n} exceeds the limit {max} for this operation")]
    OrderTooLarge { n: usize, max: usize },

    #[error("malformed matrix: {0}")]
    Malformed(String),
}
