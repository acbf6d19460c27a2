//! Covering-based rough sets and rough matroids on small finite universes.
//!
//! Subsets are `u64` bitmasks over an indexed [`Universe`]; families are kept
//! deduplicated in canonical order (by cardinality, then lexicographically).
//! Exhaustive scans run on rayon unless the `parallel` feature is disabled or
//! the call is wrapped in [`par::sequential`].

pub mod axioms;
pub mod constructions;
pub mod definable;
pub mod error;
pub mod family;
pub mod io;
pub mod fixtures;
pub mod lattice;
pub mod neighborhood;
pub mod oracle;
pub mod par;
pub mod report;
pub mod space;
pub mod structure;
pub mod universe;

pub use axioms::{check_matroid, Approximation, Axiom};
pub use definable::{definable_family, is_definable};
pub use error::{Error, Result};
pub use family::SetFamily;
pub use io::Structure;
pub use lattice::{build_lattice, LatticeDiagram};
pub use neighborhood::{lower_approx, upper_approx, NeighborhoodMap};
pub use oracle::EnumerationBudget;
pub use report::{CheckReport, Witness};
pub use space::ApproximationSpace;
pub use structure::{BinaryRelation, Covering};
pub use universe::{Subset, Universe};
