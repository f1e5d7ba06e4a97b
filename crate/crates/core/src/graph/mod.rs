//! Immutable simple undirected graphs on vertices `0..n`.

mod canon;
mod format;
pub mod named;

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{
    canonical_form, canonical_form_bounded, canonical_labeling, is_isomorphic,
    is_isomorphic_bounded, CanonicalForm, DEFAULT_CANON_LIMIT,
};
pub use format::{parse_edge_list, parse_graph6, to_dot, to_edge_list, to_graph6};

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;

    fn try_from(p: [usize; 2]) -> Result<Edge> {
        Edge::new(p[0], p[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A simple undirected graph. Construction validates the input, after which
/// the value never changes; operators build new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
    m: usize,
}

impl Graph {
    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            rows: vec![FixedBitSet::with_capacity(n); n],
            m: 0,
        }
    }

    /// Builds a graph from a list of vertex pairs. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            rows[a].insert(b);
            rows[b].insert(a);
        }
        Ok(Graph::from_rows(rows))
    }

    pub(crate) fn from_rows(rows: Vec<FixedBitSet>) -> Graph {
        let adj: Vec<Vec<usize>> = rows.iter().map(|r| r.ones().collect()).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let g = Graph { adj, rows, m };
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        let n = self.n();
        self.adj.iter().enumerate().all(|(v, ns)| {
            ns.iter()
                .all(|&u| u < n && u != v && self.rows[u].contains(v))
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| {
            ns.iter()
                .filter(move |&&v| v > u)
                .map(move |&v| Edge { u, v })
        })
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().map(|e| e.endpoints()).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// N(v), sorted.
    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.adj[v])
    }

    /// N[v] = N(v) ∪ {v}, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut out = self.adj[v].clone();
        let pos = out.partition_point(|&u| u < v);
        out.insert(pos, v);
        Ok(out)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    // Unchecked accessors for internal hot loops.
    pub(crate) fn nbrs(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub(crate) fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    /// Sorted degree sequence, a cheap isomorphism invariant.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    /// G[S]. Returns the induced subgraph together with the map from new
    /// vertex ids to the original ids (new vertex `i` is `members[i]`, where
    /// `members` is `subset` sorted and deduplicated).
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut members = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        for &v in &members {
            self.check_vertex(v)?;
        }
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let k = members.len();
        let mut rows = vec![FixedBitSet::with_capacity(k); k];
        for (i, &v) in members.iter().enumerate() {
            for &u in &self.adj[v] {
                if index[u] != usize::MAX {
                    rows[i].insert(index[u]);
                }
            }
        }
        Ok((Graph::from_rows(rows), members))
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidParameter {
                name: "relabel".into(),
                message: format!("permutation has length {}, expected {n}", perm.len()),
            });
        }
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidParameter {
                    name: "relabel".into(),
                    message: "not a permutation".into(),
                });
            }
            seen[p] = true;
        }
        Graph::from_edges(n, self.edges().map(|e| (perm[e.u], perm[e.v])))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let rows = (0..n)
            .map(|v| {
                let mut r = self.rows[v].clone();
                r.toggle_range(..);
                r.set(v, false);
                r
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let k = self.n();
        let edges = self
            .edges()
            .map(|e| e.endpoints())
            .chain(other.edges().map(|e| (e.u + k, e.v + k)));
        Graph::from_edges(k + other.n(), edges).expect("disjoint union of valid graphs")
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                        queue.push_back(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[v] + 1 >= b {
                        break;
                    }
                }
                for &u in &self.adj[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        let len = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// `true` when `vertices` (listed in cyclic order) induce a cycle of
    /// length at least three.
    pub fn induces_cycle(&self, vertices: &[usize]) -> bool {
        let k = vertices.len();
        if k < 3 || vertices.iter().any(|&v| v >= self.n()) {
            return false;
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k {
            return false;
        }
        for i in 0..k {
            for j in (i + 1)..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if self.has_edge(vertices[i], vertices[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n(),
            edges: self.edges().map(Into::into).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::from_edges(repr.n, repr.edges.into_iter().map(|[u, v]| (u, v)))
            .map_err(serde::de::Error::custom)
    }
}
