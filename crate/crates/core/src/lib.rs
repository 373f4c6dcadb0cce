//! Hamiltonian paths and cycles in squares of graphs.
//!
//! The crate covers the combinatorial toolkit around hamiltonicity of `G²`
//! for 2-connected graphs:
//!
//! - [`graph`]: immutable loopless multigraphs with stable edge ids;
//! - [`powers`]: `G²` and `G^k`, with an independent distance-based square;
//! - [`decomposition`]: blocks, `bc(G)`, block chains, DT-graphs;
//! - [`eps`]: EPS/JEPS-graphs, their verifier and exact budgeted search,
//!   cycle searches, and checkers for the EPS existence statements;
//! - [`hamilton`]: constrained hamiltonian paths and cycles in squares,
//!   `F_k` certificates and their independent verifier;
//! - [`corpus`]: graph6 / edge-list I/O, generators, enumeration of small
//!   graphs, corpus filters and the `F_k` failure hunter;
//! - [`harness`]: corpus-wide sweeps producing deterministic JSON reports.
//!
//! Every exact search takes a node budget and answers with an [`Outcome`]:
//! `Found`, `NotFound` (proved by exhaustion) or `Unknown` (budget ran out).

pub mod corpus;
pub mod decomposition;
pub mod eps;
mod error;
pub mod graph;
pub mod hamilton;
pub mod harness;
pub mod powers;
mod search;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, Vertex, VertexSet};
pub use search::{Budget, Outcome, DEFAULT_BUDGET};
