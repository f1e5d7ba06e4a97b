//! Connectivity of `KB_e(G)`, decided on the edges of `G` without building
//! `KB_e(G)`, plus two brute-force oracles.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bicliques::ORACLE_LIMIT;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::operators::{edge_biclique_graph, EdgeIndex};

/// A partition of `E(G)` into classes `1..=k`. Edges are stored sorted and
/// `class_of[i]` is the class of `edges[i]`. Classes are numbered in order
/// of their smallest edge, so two partitions of the same edge set are equal
/// iff they group the edges the same way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePartition {
    pub k: usize,
    pub edges: Vec<Edge>,
    pub class_of: Vec<usize>,
}

impl EdgePartition {
    /// Renumbers arbitrary class labels (one per sorted edge) into the
    /// canonical `1..=k` order.
    fn from_labels(edges: Vec<Edge>, labels: &[usize]) -> EdgePartition {
        let mut rename = std::collections::HashMap::new();
        let class_of: Vec<usize> = labels
            .iter()
            .map(|&l| {
                let next = rename.len() + 1;
                *rename.entry(l).or_insert(next)
            })
            .collect();
        EdgePartition {
            k: rename.len(),
            edges,
            class_of,
        }
    }

    pub fn class_of(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok().map(|i| self.class_of[i])
    }

    /// The classes as edge lists; entry `j` holds class `j + 1`.
    pub fn classes(&self) -> Vec<Vec<Edge>> {
        let mut out = vec![Vec::new(); self.k];
        for (e, &c) in self.edges.iter().zip(&self.class_of) {
            out[c - 1].push(*e);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.k == 1
    }
}

impl fmt::Display for EdgePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k={}", self.k)?;
        for (j, class) in self.classes().iter().enumerate() {
            let edges: Vec<String> = class.iter().map(Edge::to_string).collect();
            writeln!(f, "E{}: {}", j + 1, edges.join(" "))?;
        }
        Ok(())
    }
}

/// Partitions `E(G)` by the components of `KB_e(G)` in `O(n m)` time.
/// `G` must be connected.
pub fn edge_class_partition(g: &Graph) -> Result<EdgePartition> {
    edge_class_partition_counted(g).map(|(p, _)| p)
}

/// [`edge_class_partition`] together with the number of neighbour checks
/// performed, which is at most `sum of d(v)^2`.
pub fn edge_class_partition_counted(g: &Graph) -> Result<(EdgePartition, usize)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges: Vec<Edge> = g.edges().collect();
    let index = EdgeIndex::new(g);
    let mut class = vec![0usize; edges.len()];
    let mut used = vec![false; edges.len()];
    let mut work = 0usize;
    let mut k = 0;
    let mut queue = VecDeque::new();
    for seed in 0..edges.len() {
        if used[seed] {
            continue;
        }
        k += 1;
        used[seed] = true;
        queue.push_back(seed);
        while let Some(id) = queue.pop_front() {
            class[id] = k;
            let (v, w) = edges[id].endpoints();
            for (a, b) in [(v, w), (w, v)] {
                for &z in g.nbrs(a) {
                    work += 1;
                    if z == b || g.has_edge(z, b) {
                        continue;
                    }
                    let zid = index.id_in(g, a, z);
                    if !used[zid] {
                        used[zid] = true;
                        queue.push_back(zid);
                    }
                }
            }
        }
    }
    Ok((EdgePartition::from_labels(edges, &class), work))
}

/// Runs [`edge_class_partition`] on every component with an edge and merges
/// the results into one partition of `E(G)` in the original labels.
pub fn edge_class_partition_per_component(g: &Graph) -> Result<EdgePartition> {
    let edges: Vec<Edge> = g.edges().collect();
    let mut labels = vec![0usize; edges.len()];
    let mut offset = 0;
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp)?;
        let part = edge_class_partition(&sub)?;
        for (e, &c) in part.edges.iter().zip(&part.class_of) {
            let orig = Edge::new(map[e.u()], map[e.v()])?;
            let i = edges.binary_search(&orig).expect("edge of a component");
            labels[i] = offset + c;
        }
        offset += part.k;
    }
    Ok(EdgePartition::from_labels(edges, &labels))
}

/// `KB_e(G)` is connected iff the edge partition has a single class.
pub fn is_kbe_connected(g: &Graph) -> Result<bool> {
    Ok(edge_class_partition(g)?.is_connected())
}

/// Ground truth: builds `KB_e(G)`, takes its components and pulls them back
/// to the edges of `G` through biclique membership. Works on any graph.
pub fn kbe_components_oracle(g: &Graph) -> Result<EdgePartition> {
    let kbe = edge_biclique_graph(g)?;
    let mut comp_of = vec![0usize; kbe.graph.n()];
    for (c, comp) in kbe.graph.connected_components().iter().enumerate() {
        for &b in comp {
            comp_of[b] = c;
        }
    }
    let edges: Vec<Edge> = g.edges().collect();
    let mut labels = vec![usize::MAX; edges.len()];
    for (b, bic) in kbe.labels.iter().enumerate() {
        for e in bic.edges() {
            let i = edges.binary_search(&e).expect("biclique edge");
            labels[i] = comp_of[b];
        }
    }
    debug_assert!(labels.iter().all(|&l| l != usize::MAX));
    Ok(EdgePartition::from_labels(edges, &labels))
}

/// A vertex set `S`, proper and inducing an edge, whose members all have the
/// same neighbourhood outside `S`. Such a set exists iff `KB_e(G)` is
/// disconnected (for connected `G` with at least one edge).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisconnectingSet(pub Vec<usize>);

impl DisconnectingSet {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        let s = &self.0;
        if s.is_empty() || s.len() >= g.n() || s.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let inside = |v: usize| s.contains(&v);
        let outside_nbrs = |v: usize| -> Vec<usize> {
            g.nbrs(v).iter().copied().filter(|&u| !inside(u)).collect()
        };
        let first = outside_nbrs(s[0]);
        let has_edge = s.iter().any(|&a| s.iter().any(|&b| g.has_edge(a, b)));
        has_edge && s.iter().all(|&v| outside_nbrs(v) == first)
    }
}

/// Scans every proper subset and returns the lexicographically smallest
/// disconnecting set, or `None`. Exponential; `n` is limited to 16.
pub fn disconnecting_set_oracle(g: &Graph) -> Result<Option<DisconnectingSet>> {
    let n = g.n();
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            what: "disconnecting-set oracle",
            n,
            limit: ORACLE_LIMIT,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.nbrs(v).iter().fold(0u32, |acc, &u| acc | 1 << u))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best: Option<Vec<usize>> = None;
    for s in 1..full {
        let outside = full & !s;
        let members: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let ext = adj[members[0]] & outside;
        if members.iter().any(|&v| adj[v] & outside != ext) {
            continue;
        }
        if !members.iter().any(|&v| adj[v] & s != 0) {
            continue;
        }
        if best.as_ref().is_none_or(|b| members < *b) {
            best = Some(members);
        }
    }
    Ok(best.map(DisconnectingSet))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn sum_sq(g: &Graph) -> usize {
        g.degrees().iter().map(|d| d * d).sum()
    }

    #[test]
    fn complete_graphs_split_into_singletons() {
        for n in 2..=7 {
            let g = named::complete(n);
            let (p, work) = edge_class_partition_counted(&g).unwrap();
            assert_eq!(p.k, n * (n - 1) / 2);
            assert!(p.classes().iter().all(|c| c.len() == 1));
            assert_eq!(p, kbe_components_oracle(&g).unwrap());
            assert!(work <= 2 * sum_sq(&g));
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(
            edge_class_partition(&named::cycle(5).unwrap()).unwrap().k,
            1
        );
        assert_eq!(edge_class_partition(&named::star(3).unwrap()).unwrap().k, 1);
        assert_eq!(edge_class_partition(&named::complete(3)).unwrap().k, 3);
        assert!(!is_kbe_connected(&named::complete(4)).unwrap());
        assert!(is_kbe_connected(&named::necklace(5, 1).unwrap()).unwrap());
        assert_eq!(kbe_components_oracle(&named::complete(2)).unwrap().k, 1);
        let paw = named::paw();
        assert_eq!(
            edge_class_partition(&paw).unwrap(),
            kbe_components_oracle(&paw).unwrap()
        );
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = named::complete(2).disjoint_union(&named::complete(2));
        assert_eq!(edge_class_partition(&g), Err(Error::Disconnected));
        let p = edge_class_partition_per_component(&g).unwrap();
        assert_eq!(p, kbe_components_oracle(&g).unwrap());
        assert_eq!(p.k, 2);
    }

    #[test]
    fn oracle_examples() {
        let s = disconnecting_set_oracle(&named::complete(3))
            .unwrap()
            .unwrap();
        assert_eq!(s.vertices(), &[0, 1]);
        assert!(s.is_valid(&named::complete(3)));
        assert_eq!(
            disconnecting_set_oracle(&named::cycle(5).unwrap()).unwrap(),
            None
        );
        // K_{p,q} is a single biclique, so KB_e(K_{p,q}) is K_1.
        for (p, q) in [(2, 2), (2, 3)] {
            let g = named::complete_bipartite(p, q).unwrap();
            assert_eq!(disconnecting_set_oracle(&g).unwrap(), None);
            assert!(is_kbe_connected(&g).unwrap());
        }
        let diamond = named::diamond();
        let s = disconnecting_set_oracle(&diamond).unwrap().unwrap();
        assert!(s.is_valid(&diamond));
        assert!(!is_kbe_connected(&diamond).unwrap());
        assert!(disconnecting_set_oracle(&named::complete(17)).is_err());
    }

    #[test]
    fn display_lists_classes() {
        let p = edge_class_partition(&named::complete(3)).unwrap();
        assert_eq!(p.to_string(), "k=3\nE1: 0-1\nE2: 0-2\nE3: 1-2\n");
    }
}
