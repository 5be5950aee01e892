//! Schur functions in superspace.
//!
//! Two independent constructions are provided for the families s_Λ and
//! s̄_Λ: one through Key polynomials and divided differences, one through
//! combinatorial Pieri rules. Each is used to check the other.

pub mod bases;
pub mod coeff;
pub mod error;
pub mod keyops;
pub mod pieri;
pub mod schur;
pub mod superpartition;
pub mod superpoly;
pub mod tableaux;

pub use bases::{Basis, SymSuperFunc};
pub use coeff::Coefficient;
pub use error::{Error, Result};
pub use superpartition::{sp, Partition, StripKind, SuperPartition};
pub use superpoly::{Action, Permutation, Poly, SuperPolynomial};
