//! Exact search and proof checking for P-intersecting families of graphs.
//!
//! A family of graphs on `0..n` is P-intersecting when the intersection of
//! any two members (a member with itself included) has property P. The
//! crate provides the graph encodings and predicates ([`graph`],
//! [`predicates`]), the extremal constructions ([`constructions`]), the two
//! upper-bound engines ([`certificates`] over GF(2) and [`projections`] via
//! uniform covers) and an exact maximum-family search ([`search`]).

pub mod certificates;
pub mod clique;
pub mod constructions;
mod decimal;
pub mod error;
pub mod family;
pub mod graph;
pub mod predicates;
pub mod projections;
pub mod search;

pub use error::{Error, Result};
pub use family::{verify_family, Family, FamilyCheck};
pub use graph::{
    edge_slot, pair_count, slot_edge, DirectedGraph, Graph, GraphKind, OrientedGraph, SimpleGraph,
    MAX_VERTICES,
};
pub use predicates::Property;
