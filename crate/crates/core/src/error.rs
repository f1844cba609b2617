use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("enumeration budget exceeded: {needed} generators, limit {limit}")]
    Budget { needed: usize, limit: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("not a nilpotent algebra: {0}")]
    NotNilpotentAlgebra(String),

    #[error("not a linorder: {0}")]
    NotLinorder(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("relation is not acyclic")]
    NotAcyclic,

    #[error("graph contains a directed cycle")]
    Cyclic,

    #[error("no sampled element reached {target} after {trials} trials (best {best})")]
    LowerBound {
        target: usize,
        best: usize,
        trials: usize,
    },

    #[error("certificates do not meet: lower bound {lower}, upper bound {upper}")]
    Inconclusive { lower: usize, upper: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invariant(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}
