use thiserror::Error;

use crate::set_core::Subset;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("set {set:?} has {found} elements, expected {expected}")]
    Cardinality {
        set: Vec<usize>,
        expected: usize,
        found: usize,
    },

    #[error("duplicate set {0:?}")]
    Duplicate(Vec<usize>),

    #[error("{0}")]
    Range(String),

    #[error("ground sets differ: [{left}] vs [{right}]")]
    GroundMismatch { left: usize, right: usize },

    #[error("{set} is not contained in {window}")]
    NotContained { set: Subset, window: Subset },

    /// The asserted intersection bound fails on the carried pair.
    #[error("family is not {b}-intersecting: {} and {} share only {shared}", witness.0, witness.1)]
    NotBIntersecting {
        b: usize,
        shared: usize,
        witness: (Subset, Subset),
    },

    #[error("family is not intersecting: {} and {} are disjoint", witness.0, witness.1)]
    NotIntersecting { witness: (Subset, Subset) },

    #[error("the bound needs n >= 2k, got n = {n}, k = {k}")]
    BoundNotApplicable { n: usize, k: usize },

    #[error("{message} (intersection sizes {sizes:?})")]
    Precondition { message: String, sizes: Vec<usize> },

    #[error("instance too large: {0}")]
    Scale(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }
}
