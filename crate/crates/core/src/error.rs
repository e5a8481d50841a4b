use thiserror::Error;

/// Errors raised by group and graph construction, verification and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// `a * b` left the candidate subgroup.
    #[error("not a subgroup: product of elements {a} and {b} is not in the set")]
    NotClosed { a: usize, b: usize },

    /// `g * n * g^-1` left the candidate normal subgroup.
    #[error("not normal: conjugate of element {n} by element {g} is not in the subgroup")]
    NotNormal { g: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
