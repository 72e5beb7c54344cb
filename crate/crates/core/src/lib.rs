//! Numerical semigroups and the nearly Gorenstein property.
//!
//! * [`semigroup`]: construction, Apéry sets, Frobenius number, gaps,
//!   pseudo-Frobenius numbers, factorizations.
//! * [`gorenstein`]: canonical ideal, symmetric / almost symmetric / nearly
//!   Gorenstein predicates, NG-vectors.
//! * [`rf`]: RF+ / RF- matrices, extremal gaps `M_{i,j}`, PF1 / PF2.
//! * [`construct`]: Backelin's family, the six-generated family, numerical
//!   duplication and duplication towers.
//! * [`verify`]: genus-tree enumeration and the claim checker.

pub mod construct;
pub mod error;
pub mod gorenstein;
pub mod rf;
pub mod semigroup;
pub mod verify;

pub use error::{Error, Result};
pub use gorenstein::{NgVector, RelativeIdeal};
pub use rf::{MaxGapTable, PfClassification, RfKind, RfMatrix};
pub use semigroup::{FactorizationVector, NumericalSemigroup};
