use thiserror::Error;

use crate::laurent::Var;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable `{0}` has no image in the substitution map")]
    MissingImage(Var),
    #[error("division is not exact")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivByZero,
    #[error("polynomial is not a perfect square")]
    NotAPerfectSquare,
    #[error("negative index {0} (deformed numbers are defined for n >= 0)")]
    NegativeIndex(i64),
    #[error("invalid range: {0}")]
    BadRange(String),
    #[error("degenerate (q,p) pair: u and v must differ")]
    DegenerateSpec,
    #[error("spec map {map} expects source {expected}, got {got}")]
    SpecMismatch {
        map: &'static str,
        expected: String,
        got: String,
    },
    #[error("not expressible in the (a,z) variables: {0}")]
    NotExpressible(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("fractional power at byte {offset} applied to a non-monomial base")]
    NonMonomialFractionalPower { offset: usize },
    #[error("invalid variable name `{0}` (expected a single lowercase ASCII letter)")]
    InvalidVariable(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
