use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("invalid superpartition: {0}")]
    InvalidSuperPartition(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),

    #[error("{needed} variables required, only {available} available")]
    TooFewVariables { needed: usize, available: usize },

    #[error("polynomial is not divisible by x{i} - x{j}")]
    NotDivisible { i: usize, j: usize },

    #[error("polynomial is not invariant under the diagonal action")]
    NotSymmetric,

    #[error("generator {generator} cannot multiply the {family} family")]
    IncompatibleGenerator { generator: String, family: String },

    #[error("operation not defined for the {0} basis")]
    UnsupportedBasis(String),

    #[error("linear system is singular")]
    Singular,

    #[error("invalid tableau diagram: {0}")]
    InvalidTableau(String),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
