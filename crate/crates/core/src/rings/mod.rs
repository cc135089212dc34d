//! The presented rings: generators, straightening, the group action,
//! characters and the equivariant relation set.

pub mod action;
pub mod characters;
pub mod element;
pub mod engine;
pub mod equivariant;
pub mod generators;

pub use action::{act, Substitution};
pub use element::{RingElement, Space};
pub use engine::{rewrite_system, Flavor, RewriteSystem};
pub use generators::{Generator, Linear, Monomial};
