//! The edge-biclique operator `KB_e` and the machinery around it.
//!
//! `KB_e(G)` has one vertex per biclique (maximal induced complete bipartite
//! subgraph) of `G`; two vertices are adjacent when their bicliques share an
//! edge of `G`. The crate enumerates bicliques, builds `KB_e`, line and
//! burgeon graphs, partitions edges by the components of `KB_e(G)` without
//! building it, searches for necklace divergence certificates, and classifies
//! the behaviour of iterated `KB_e`.

pub mod bicliques;
pub mod budget;
pub mod connectivity;
pub mod dynamics;
pub mod error;
pub mod graph;
pub mod operators;
pub mod structures;

pub use budget::Budgets;
pub use error::{Error, Result};
pub use graph::{Edge, Graph};
