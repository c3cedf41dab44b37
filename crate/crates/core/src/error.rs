use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("unsupported degree: frequency {0} exceeds 64")]
    UnsupportedDegree(u64),
    #[error("non-canonical input: {0}")]
    NonCanonicalInput(String),
    #[error("tuple {0:?} is not in M0")]
    NotM0(Vec<u64>),
    #[error("search budget exceeded: {count} tuples > budget {budget}")]
    BudgetExceeded { count: u128, budget: u64 },
    /// A proof step that cannot fail for valid input did fail.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by the caller's arguments rather than by a
    /// failed verification.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
