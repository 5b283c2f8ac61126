use thiserror::Error;

/// Errors raised by the library. The CLI maps them to exit code 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Lie type {0}")]
    InvalidType(String),
    #[error("cannot parse case string '{0}'")]
    Parse(String),
    #[error("case {0} is not one of the solved (g, weight) pairs")]
    NotInTable(String),
    #[error("case {0} has no modified variant")]
    NoVariant(String),
    #[error("case {0} needs its modified variant for this operation (standard diagram has k-chains)")]
    NeedsModified(String),
    #[error("weight is not dominant")]
    NotDominant,
    #[error("not a positive root: {0:?}")]
    NotARoot(Vec<i64>),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("diagram has {0} vertices, more than the supported 128")]
    TooLarge(usize),
    #[error("cascade failed: {0}")]
    Cascade(String),
}

pub type Result<T> = std::result::Result<T, Error>;
