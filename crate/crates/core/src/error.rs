use thiserror::Error;

/// Errors raised by group construction and the Goursat operations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("unsupported group: {0}")]
    Unsupported(String),
    #[error("group order {order} exceeds the configured cap of {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("element index {index} is out of range for a group of order {order}")]
    InvalidElement { index: usize, order: usize },
    #[error("subgroups do not share a parent group")]
    ParentMismatch,
    #[error("subgroup is not contained in the enclosing subgroup")]
    NotContained,
    #[error("subgroup is not normal in the enclosing subgroup")]
    NotNormal,
    #[error("expected a direct product of {expected} factors, found {found}")]
    FactorCount { expected: usize, found: usize },
    #[error("invalid factor selection: {0}")]
    InvalidSelection(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
