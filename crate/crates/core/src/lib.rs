//! Coxeter groups over `Q(2cos(pi/N))`: exact roots, inversion sets, weak
//! order joins, low elements, tight gates, Garside shadows and cone type
//! automata.

// Roots hash only their coefficients; the lock inside the shared field is never part of a key.
#![allow(clippy::mutable_key_type)]

pub mod analysis;
pub mod automata;
pub mod catalog;
pub mod error;
pub mod field;
pub mod inversions;
pub mod lp;
pub mod presets;
pub mod shadows;
pub mod system;
pub mod verify;
pub mod weak_order;

pub use catalog::{Catalog, ElementInfo, RootId, RootSet};
pub use error::{CoxeterError, Result};
pub use field::{AlgebraicReal, Field};
pub use system::{CoxeterMatrix, CoxeterSystem, Element, GenSet, Label, Root};
