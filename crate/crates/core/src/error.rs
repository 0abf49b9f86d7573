use thiserror::Error;

/// Errors raised by the algebra kernels.
///
/// Failed axiom checks are not errors: they are reported through the
/// verification report types. These variants cover malformed input and
/// broken preconditions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error("{from} does not divide {to}")]
    NotADivisor { from: u32, to: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("not an exact factorization: {0}")]
    NotAFactorization(String),

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("not a 2-cocycle: {0}")]
    NotACocycle(String),

    #[error("size limit exceeded: {what} is {actual}, limit {limit}")]
    LimitExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, HopfError>;
