//! Verification and enumeration of finite ringoids: sets with two binary
//! operations linked only by the distributive laws.
//!
//! Elements of a carrier of size `n` are `0..n`. The modules follow the
//! layers of the engine:
//!
//! * [`table`] and [`ringoid`]: Cayley tables, ringoids and their flags.
//! * [`congruence`]: principal congruences, simplicity and the semiring
//!   congruence constructions.
//! * [`ideal`]: ideals, k-ideals and the fast k-ideal-simplicity criterion.
//! * [`symmetry`]: automorphisms, endomorphisms, canonical forms.
//! * [`search`]: exhaustive isomorphism-free enumeration.

pub mod catalog;
pub mod congruence;
pub mod error;
pub mod ideal;
pub mod perm;
pub mod random;
pub mod ringoid;
pub mod search;
pub mod subset;
pub mod symmetry;
pub mod table;

pub use congruence::Partition;
pub use error::{Error, Result};
pub use perm::{PermSet, Permutation};
pub use ringoid::{Flags, Ringoid};
pub use subset::SubsetMask;
pub use table::{CayleyTable, ElementStats};
