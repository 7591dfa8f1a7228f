#![no_std]

//! Algorithms for cubic graphs: isomorph-free generation of cyclically
//! 4-edge-connected graphs and snarks, canonical forms, edge colourings,
//! 2-factors, cycle enumeration and cycle double covers.
//!
//! Everything here is pure computation over [`CubicGraph`] values and needs
//! only `alloc`. File formats, the command line front end and reporting live
//! in the `snarkkit` crate.

extern crate alloc;

pub mod bits;
pub mod canon;
pub mod cdc;
pub mod check;
pub mod color;
pub mod cycle;
pub mod factor;
pub mod generate;
pub mod graph;
mod rng;

pub use bits::Bits;
pub use canon::{are_isomorphic, automorphism_count, canonical_code, is_vertex_transitive, CanonicalCode};
pub use graph::{CubicGraph, ConnectivityValue, GraphError};

/// Result of an exhaustive search that may stop at a work budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    /// The search space was exhausted without a witness.
    Exhausted,
    /// The work budget ran out before the search finished.
    ResourceLimit,
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::Exhausted => Outcome::Exhausted,
            Outcome::ResourceLimit => Outcome::ResourceLimit,
        }
    }
}
