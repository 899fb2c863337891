use thiserror::Error;

use crate::exact::Rational;
use crate::partition::Partition;

/// Errors raised by the exact core.
///
/// Operator failures (`NonZeroRemainder`, `NotEigenfunction`) are never
/// expected for inputs in the deformed ring; seeing one means either the
/// input left the ring or an identity failed.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("theta = {value} is excluded: {rule}")]
    ExcludedParameter { value: Rational, rule: String },

    #[error("pole at theta = {value}: denominator vanishes")]
    Pole { value: Rational },

    #[error("weight mismatch: |{0}| != |{1}|")]
    WeightMismatch(Partition, Partition),

    #[error("box ({row}, {col}) lies outside the diagram of {partition}")]
    BoxOutsideDiagram {
        partition: Partition,
        row: usize,
        col: usize,
    },

    #[error("{partition} is not in the fat hook H({n},{m})")]
    NotInFatHook {
        partition: Partition,
        n: usize,
        m: usize,
    },

    #[error("{partition} lies in the fat hook H({n},{m}); a kernel label must lie outside")]
    InFatHook {
        partition: Partition,
        n: usize,
        m: usize,
    },

    #[error("division by (x{i} - x{j}) left a nonzero remainder")]
    NonZeroRemainder { i: usize, j: usize },

    #[error("input is not symmetric in its variables")]
    AsymmetricInput,

    #[error("operator output is not proportional to the input ({0})")]
    NotEigenfunction(String),

    #[error("variable layout mismatch: expected ({expected_n},{expected_m}), got ({n},{m})")]
    LayoutMismatch {
        expected_n: usize,
        expected_m: usize,
        n: usize,
        m: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
