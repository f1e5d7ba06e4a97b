//! Graph operators: `KB_e`, the line graph `L`, and iteration of `KB_e`.
//! Burgeon graphs live in [`burgeon`].

pub mod burgeon;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::bicliques::{enumerate_bicliques, enumerate_bicliques_capped, Biclique, BicliqueSet};
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub use burgeon::{
    burgeon_graph, recognize_burgeon, verify_burgeon_identity, BurgeonSlot, BurgeonWitness,
    IdentityCheck,
};

/// A graph whose vertex `i` came from `labels[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledGraph<L> {
    pub graph: Graph,
    pub labels: Vec<L>,
}

impl<L> LabeledGraph<L> {
    pub fn label(&self, v: usize) -> Option<&L> {
        self.labels.get(v)
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

impl<L: ToString> LabeledGraph<L> {
    pub fn label_strings(&self) -> Vec<String> {
        self.labels.iter().map(ToString::to_string).collect()
    }
}

/// `KB_e(G)`: one vertex per biclique, adjacent iff the bicliques share an
/// edge of `G`. Vertex `i` is the `i`-th biclique in canonical order.
pub fn edge_biclique_graph(g: &Graph) -> Result<LabeledGraph<Biclique>> {
    let bicliques = enumerate_bicliques(g)?;
    Ok(kbe_from_bicliques(g, bicliques))
}

pub fn edge_biclique_graph_capped(g: &Graph, cap: usize) -> Result<LabeledGraph<Biclique>> {
    let bicliques = enumerate_bicliques_capped(g, cap)?;
    Ok(kbe_from_bicliques(g, bicliques))
}

/// Builds `KB_e(G)` from the biclique family of `G`. Each edge of `G`
/// collects the bicliques containing it; those bicliques are pairwise
/// adjacent, and these are the only adjacencies.
pub fn kbe_from_bicliques(g: &Graph, bicliques: BicliqueSet) -> LabeledGraph<Biclique> {
    let index = EdgeIndex::new(g);
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.m()];
    for (i, b) in bicliques.iter().enumerate() {
        for &u in b.left() {
            for &w in b.right() {
                holders[index.id_in(g, u, w)].push(i);
            }
        }
    }
    let k = bicliques.len();
    let mut rows = vec![FixedBitSet::with_capacity(k); k];
    for hs in &holders {
        for (a, &x) in hs.iter().enumerate() {
            for &y in &hs[a + 1..] {
                rows[x].insert(y);
                rows[y].insert(x);
            }
        }
    }
    LabeledGraph {
        graph: Graph::from_rows(rows),
        labels: bicliques.into_vec(),
    }
}

/// Dense edge ids: the edge `u-w` has the same id from both endpoints.
pub(crate) struct EdgeIndex {
    offsets: Vec<Vec<usize>>,
}

impl EdgeIndex {
    pub(crate) fn new(g: &Graph) -> EdgeIndex {
        let mut offsets: Vec<Vec<usize>> = g.vertices().map(|v| vec![0; g.nbrs(v).len()]).collect();
        let mut next = 0;
        for u in g.vertices() {
            for (pos, &w) in g.nbrs(u).iter().enumerate() {
                if w > u {
                    offsets[u][pos] = next;
                    let back = g.nbrs(w).binary_search(&u).expect("symmetric");
                    offsets[w][back] = next;
                    next += 1;
                }
            }
        }
        EdgeIndex { offsets }
    }

    /// Panics if `u-w` is not an edge.
    pub(crate) fn id_in(&self, g: &Graph, u: usize, w: usize) -> usize {
        let pos = g.nbrs(u).binary_search(&w).expect("edge present");
        self.offsets[u][pos]
    }
}

/// `L(G)`: one vertex per edge (in sorted order), adjacent iff the edges
/// share an endpoint.
pub fn line_graph(g: &Graph) -> LabeledGraph<Edge> {
    let edges: Vec<Edge> = g.edges().collect();
    let index = EdgeIndex::new(g);
    let k = edges.len();
    let mut rows = vec![FixedBitSet::with_capacity(k); k];
    for v in g.vertices() {
        let ids: Vec<usize> = g.nbrs(v).iter().map(|&u| index.id_in(g, v, u)).collect();
        for (a, &x) in ids.iter().enumerate() {
            for &y in &ids[a + 1..] {
                rows[x].insert(y);
                rows[y].insert(x);
            }
        }
    }
    LabeledGraph {
        graph: Graph::from_rows(rows),
        labels: edges,
    }
}

/// `KB_e^k(G)`. Fails with [`Error::BudgetExceeded`] carrying the step at
/// which an iterate would exceed the vertex or biclique budget.
pub fn iterate_kbe(g: &Graph, k: usize, budgets: &Budgets) -> Result<Graph> {
    let mut current = g.clone();
    for step in 0..k {
        current =
            kbe_step(&current, budgets).map_err(|reason| Error::BudgetExceeded { step, reason })?;
    }
    Ok(current)
}

/// One application of `KB_e` under budgets; the error is a human-readable
/// reason.
pub(crate) fn kbe_step(g: &Graph, budgets: &Budgets) -> std::result::Result<Graph, String> {
    match enumerate_bicliques_capped(g, budgets.enumeration_cap()) {
        Ok(set) if set.len() > budgets.max_vertices => Err(format!(
            "next iterate has more than {} vertices",
            budgets.max_vertices
        )),
        Ok(set) => Ok(kbe_from_bicliques(g, set).graph),
        Err(Error::BicliqueCapExceeded { cap }) if cap > budgets.max_vertices => Err(format!(
            "next iterate has more than {} vertices",
            budgets.max_vertices
        )),
        Err(Error::BicliqueCapExceeded { cap }) => Err(format!("more than {cap} bicliques")),
        Err(e) => Err(e.to_string()),
    }
}
