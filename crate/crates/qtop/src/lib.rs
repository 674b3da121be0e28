//! Exact computations on finite topological spaces: specialization preorders,
//! quotient (final) topologies, path-component spaces, free monoids with
//! involution, and truncated free quasitopological groups carrying the
//! reduction and refined quotient topologies.
//!
//! Everything here is exact and desk-scale. Carriers are finite, topologies
//! are stored as minimal-open-set matrices, and every verdict is decided by
//! explicit enumeration or fixpoint computation, never by sampling.

pub mod bitset;
pub mod catalog;
pub mod cli;
pub mod coverbasis;
pub mod error;
pub mod finspace;
pub mod freetop;
pub mod report;
pub mod suspension;
pub mod words;

pub use error::{Error, Result};
