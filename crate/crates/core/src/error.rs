use thiserror::Error;

use crate::rational::Rational;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed rational literal or moment list. `position` is the byte
    /// offset of the offending token in the input.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// The linear system has determinant zero. Signals a degenerate choice of
    /// parameters or inconsistent input; exact arithmetic never approximates
    /// its way past this.
    #[error("singular linear system (zero determinant)")]
    SingularSystem,

    /// An index `k` outside the valid range for a moment vector of degree `n`.
    #[error("index {index} out of range for moment degree {n}")]
    IndexOutOfRange { index: usize, n: usize },

    /// The moment vector has too few entries for the requested operation.
    #[error("moment degree {actual} too small: need at least {required}")]
    DegreeTooSmall { actual: usize, required: usize },

    /// Operation is only defined for a specific moment degree.
    #[error("wrong moment degree: expected {expected}, got {actual}")]
    WrongDegree {
        expected: &'static str,
        actual: usize,
    },

    /// The spline system is singular at this value of the junction parameter.
    #[error("spline system degenerate at t = {t}")]
    DegenerateT { t: Rational },
}

pub type Result<T> = std::result::Result<T, Error>;
