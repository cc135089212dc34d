//! Exact computations for the hyperoctahedral groups `B_n`.
//!
//! The crate covers signed permutations and their combinatorics, idempotents in
//! the rational group algebra, characters of `B_n`, the Orlik-Solomon type rings
//! attached to the `B_n` configuration spaces and the chamber model that realises
//! the ungraded rings as functions on cyclic arrangements.

pub mod algebra;
pub mod chambers;
pub mod characters;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod linalg;
pub mod par;
pub mod rings;
pub mod scalar;
pub mod signed;

pub use error::{Error, Result};
pub use scalar::Rational;
