//! Internal (friendly) partitions and cohesive sets in regular graphs.
//!
//! An *internal partition* splits the vertex set into two nonempty classes
//! so that every vertex has at least as many neighbors in its own class as
//! in the other one; a *k-cohesive* set induces a subgraph of minimum
//! degree at least `k`. This crate provides:
//!
//! * [`graph`] — the graph substrate: edge-list I/O, cuts, cores, cycles;
//! * [`generators`] — circulants, Abelian Cayley graphs, Paley graphs,
//!   switching-hard families, Gale–Ryser completion, random regular graphs;
//! * [`engine`] — verification, local switching with guarantee thresholds,
//!   exhaustive search, greedy extension, cohesive-set search, clustering
//!   bisection heuristics, and text certificates;
//! * [`cohesion`] — the min-intersection pipeline for 5-regular graphs
//!   (bounded-degree dense subgraphs, edge augmentation, core re-extraction);
//! * [`cayley`] — constructive partitions and the full classification of
//!   5-regular Abelian Cayley graphs, near-complete circulants, and the
//!   Paley scan.

pub mod cayley;
pub mod cohesion;
pub mod engine;
mod error;
pub mod generators;
pub mod graph;
pub mod group;

pub use error::Error;
pub use graph::{Bipartition, Graph, VertexSet};
