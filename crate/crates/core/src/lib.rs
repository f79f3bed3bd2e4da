//! Exact computations around the vertex connectivity of chordal graphs.
//!
//! The crate is organised in layers:
//!
//! * [`graph`]: bitset graphs, named families, graph6 I/O, canonical forms and
//!   isomorph-free enumeration of small graphs.
//! * [`invariants`]: chordality, universal vertices, vertex connectivity
//!   (max-flow and brute force), maximum minimal vertex covers and the
//!   algebraic connectivity.
//! * [`stanley_reisner`]: clique complexes, reduced homology over GF(2) and Q,
//!   and graded Betti tables of `S/I(G^c)` through Hochster's formula.
//! * [`constructions`]: verified chordal* graphs for every admissible
//!   connectivity value.
//! * [`harness`]: single-graph analysis and corpus-wide verification reports.
//!
//! A graph is *chordal\** when it is chordal and has no universal vertex.
//! Every chordal\* graph `G` on `n` vertices satisfies
//! `kappa(G) <= (n - 1) - ceil(2 sqrt(n) - 2)`; see [`invariants::kappa_bound`].

pub mod constructions;
pub mod error;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod stanley_reisner;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
