use thiserror::Error;

use crate::group::GroupKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("kind mismatch: expected {expected}, found {found}")]
    KindMismatch {
        expected: GroupKind,
        found: GroupKind,
    },

    #[error("the metacyclic group needs p = 1 (mod q); got p = {p}, q = {q}")]
    NotCongruent { p: u32, q: u32 },

    #[error("{name} = {value} is out of range ({range})")]
    OutOfRange {
        name: &'static str,
        value: u64,
        range: String,
    },

    #[error("subgroup is not regular: {0}")]
    NotRegular(String),

    #[error("brute-force budget exceeded: pq = {order} > {budget}")]
    BudgetExceeded { order: u64, budget: u64 },

    #[error("not a skew brace: {0}")]
    NotABrace(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
