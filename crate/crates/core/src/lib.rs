//! Finite-group computation engine and del Pezzo line-configuration
//! toolkit.
//!
//! The crate has three layers:
//!
//! * exact finite group machinery: [`perm::Permutation`],
//!   [`group::PermGroup`], Cayley tables and extension enumeration in
//!   [`table`], and generator-defined homomorphisms in [`hom`];
//! * geometry-flavored data: blow-up Picard lattices and line dual
//!   graphs in [`picard`], and the 16-line symmetry group W(D5) as
//!   signed permutations in [`weyl`];
//! * the [`jordan`] engine (minimal normal abelian index, Jordan
//!   constants, the squared-index bound) and the [`verify`] harness
//!   that reproduces every supported group-theoretic fact as a named,
//!   machine-readable check.

pub mod config;
pub mod error;
pub mod examples;
pub mod group;
pub mod hom;
pub mod jordan;
pub mod perm;
pub mod picard;
pub mod report;
pub mod table;
pub mod verify;
pub mod weyl;

pub use config::Caps;
pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Permutation;
