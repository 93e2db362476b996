use thiserror::Error;

/// Failures of exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero cannot be raised to a negative power")]
    ZeroToNegativePower,
    #[error("discriminant must be nonzero")]
    ZeroDiscriminant,
    #[error("mismatched discriminants: {left} and {right}")]
    DiscriminantMismatch { left: String, right: String },
    #[error("{0} has zero norm and is not invertible")]
    NotInvertible(String),
}

/// Rejected sequence parameters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("q must be nonzero")]
    ZeroQ,
    #[error("p^2 + 4q vanishes for p = {p}, q = {q}: the characteristic roots coincide")]
    RepeatedRoot { p: String, q: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {kind} from {input:?}: {reason}")]
pub struct ParseError {
    pub kind: &'static str,
    pub input: String,
    pub reason: String,
}

impl ParseError {
    pub(crate) fn new(kind: &'static str, input: &str, reason: impl Into<String>) -> Self {
        ParseError {
            kind,
            input: input.to_owned(),
            reason: reason.into(),
        }
    }
}
