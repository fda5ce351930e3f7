//! Exact computations for graded polynomial identities of finite-dimensional
//! Lie algebras graded by finite semigroups.

pub mod ado;
pub mod algebra;
pub mod asymptotics;
pub mod codim;
pub mod error;
pub mod haction;
pub mod linalg;
pub mod poly;
pub mod regev;
pub mod semigroup;
pub mod symmetric;
pub mod witness;

pub use algebra::{AlgebraElement, GradedLieAlgebra, ValidationReport, Violation};
pub use error::{Error, Result};
pub use semigroup::FiniteSemigroup;
