use thiserror::Error;

use crate::morphism::Base;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {context} (expected {expected}, found {found})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("cannot combine a {left} map with a {right} map")]
    TagMismatch { left: Base, right: Base },

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("sequence of order {available} cannot supply order {required}")]
    InsufficientOrder { required: usize, available: usize },

    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    #[error("unknown variable x{index} (domain has dimension {dom})")]
    UnknownVariable { index: usize, dom: usize },

    #[error("function `{name}` is not allowed in a polynomial map")]
    FunctionNotAllowed { name: String },

    #[error("operation needs a {expected} map, got {found}")]
    WrongBase { expected: Base, found: Base },

    #[error("axiom {axiom} fails at n={n}, k={k}")]
    AxiomFailure { axiom: String, n: usize, k: usize },

    #[error("invalid document: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        })
    }
}
