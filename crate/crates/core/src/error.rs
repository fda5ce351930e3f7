use thiserror::Error;

/// Errors raised by the algebraic engines.
///
/// Axiom violations found by validators are reported as data, never through
/// this type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid semigroup: {0}")]
    InvalidSemigroup(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid degree {degree} for a semigroup of size {size}")]
    InvalidDegree { degree: usize, size: usize },

    #[error("assignment does not cover variable x{0}")]
    MissingIndex(usize),

    #[error("permutation of size {perm} applied to a polynomial of degree {poly}")]
    SizeMismatch { perm: usize, poly: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("symmetrizer would have {terms} terms, above the cap of {cap}")]
    SymmetrizerTooLarge { terms: u128, cap: u128 },

    #[error("inconsistent beta vector: {0}")]
    InconsistentBeta(String),

    #[error("degree {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("integer overflow in exact kernel")]
    Overflow,

    #[error("optimizer did not converge within {0} iterations")]
    NonConvergence(usize),

    #[error("infeasible point: {0}")]
    Infeasible(String),

    #[error("negative input to phi: {0}")]
    NegativeInput(String),

    #[error("{0}")]
    NonMonotone(String),

    #[error("representation is not faithful")]
    NotFaithful,

    #[error("semigroup is not abelian")]
    NonAbelianSemigroup,

    #[error("multiplication algebra is not dense (dimension {dim} < {full})")]
    NotDense { dim: usize, full: usize },

    #[error("guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
