//! Distance-based invariants of small simple graphs, exact verdicts for the
//! inequalities relating them, and isomorph-free exhaustive enumeration.
//!
//! The crate is organized in five layers:
//!
//! * [`graph`]: the [`Graph`] type (adjacency bit rows, at most 64 vertices),
//!   graph6 text I/O, BFS distances, triangle counts, induced-pattern scans,
//!   and canonical forms.
//! * [`invariants`]: per-edge vertex/edge splits and the invariant vector
//!   (Wiener, PI, vertex PI, Szeged, edge Szeged, Zagreb).
//! * [`families`]: extremal families (`X`, `Y`), strongly regular closed
//!   forms, complete multipartite constructions.
//! * [`theorems`]: one verdict per inequality, with exact integer
//!   cross-multiplied comparisons and equality-class predictions.
//! * [`enumerate`]: canonical-augmentation generation of all isomorphism
//!   classes of a given order, plus censuses and the full verdict survey.
//!
//! All index arithmetic is 64-bit unsigned and exact; the one floating-point
//! operation in the crate ([`theorems::PolyaInput`]) carries an explicit
//! relative tolerance.

#![forbid(unsafe_code)]

pub mod enumerate;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod theorems;

pub use graph::{Graph, GraphError};
pub use invariants::{compute_invariants, InvariantVector};
