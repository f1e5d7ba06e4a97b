//! Burgeon graphs.
//!
//! `B(G)` replaces each vertex `v` by a clique `C_v` on `d(v)` vertices and
//! each edge `uv` by a single cross edge between `C_u` and `C_v`, so that
//! every vertex of `B(G)` has exactly one neighbour outside its clique.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::{edge_biclique_graph, line_graph, LabeledGraph};
use crate::error::{Error, Result};
use crate::graph::{is_isomorphic_bounded, Edge, Graph, DEFAULT_CANON_LIMIT};

/// Provenance of a burgeon vertex: it sits in the clique of host vertex
/// `block` and its cross edge leads towards host vertex `toward`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BurgeonSlot {
    pub block: usize,
    pub toward: usize,
}

impl fmt::Display for BurgeonSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.block, self.toward)
    }
}

/// `B(G)`. Blocks are laid out in host-vertex order; inside the block of
/// `v`, local index `j` is the vertex whose cross edge goes to the `j`-th
/// smallest neighbour of `v`. Isolated vertices are rejected.
pub fn burgeon_graph(g: &Graph) -> Result<LabeledGraph<BurgeonSlot>> {
    if let Some(v) = g.vertices().find(|&v| g.nbrs(v).is_empty()) {
        return Err(Error::IsolatedVertex(v));
    }
    let mut offset = Vec::with_capacity(g.n());
    let mut labels = Vec::with_capacity(2 * g.m());
    for v in g.vertices() {
        offset.push(labels.len());
        labels.extend(g.nbrs(v).iter().map(|&u| BurgeonSlot {
            block: v,
            toward: u,
        }));
    }
    let slot = |v: usize, u: usize| offset[v] + g.nbrs(v).binary_search(&u).expect("edge");
    let mut edges = Vec::new();
    for v in g.vertices() {
        let d = g.nbrs(v).len();
        for a in 0..d {
            for b in a + 1..d {
                edges.push((offset[v] + a, offset[v] + b));
            }
        }
    }
    for e in g.edges() {
        edges.push((slot(e.u(), e.v()), slot(e.v(), e.u())));
    }
    Ok(LabeledGraph {
        graph: Graph::from_edges(labels.len(), edges)?,
        labels,
    })
}

/// Evidence that `G = B(host)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurgeonWitness {
    pub host: Graph,
    /// `blocks[h][j]` is the vertex of `G` in the clique of host vertex `h`
    /// whose cross edge leads to the `j`-th smallest neighbour of `h`.
    pub blocks: Vec<Vec<usize>>,
    /// Cross edges of `G`, one per host edge, sorted.
    pub matching: Vec<Edge>,
}

impl BurgeonWitness {
    /// Replays the witness: rebuilds `B(host)` and checks that the block map
    /// sends it exactly onto `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let Ok(b) = burgeon_graph(&self.host) else {
            return false;
        };
        if b.graph.n() != g.n() || self.blocks.len() != self.host.n() {
            return false;
        }
        let mut map = vec![usize::MAX; g.n()];
        for (i, slot) in b.labels.iter().enumerate() {
            let Some(&v) = self
                .blocks
                .get(slot.block)
                .and_then(|blk| blk.get(i - first_slot(&b.labels, slot.block)))
            else {
                return false;
            };
            if v >= g.n() || map[i] != usize::MAX {
                return false;
            }
            map[i] = v;
        }
        let mut seen = vec![false; g.n()];
        for &v in &map {
            if v == usize::MAX || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        let Ok(image) = b.graph.relabel(&map) else {
            return false;
        };
        let mut cross: Vec<Edge> = b
            .graph
            .edges()
            .filter(|e| b.labels[e.u()].block != b.labels[e.v()].block)
            .map(|e| Edge::new(map[e.u()], map[e.v()]).expect("distinct"))
            .collect();
        cross.sort_unstable();
        image == *g && cross == self.matching
    }

    /// The host is a cycle, a path (including `K_2`) or `K_{1,3}`: the cases
    /// in which the burgeon graph converges.
    pub fn host_is_cycle_path_or_claw(&self) -> bool {
        let h = &self.host;
        if !h.is_connected() || h.is_empty() {
            return false;
        }
        let degs = h.degree_sequence();
        let n = h.n();
        let is_cycle = n >= 3 && h.m() == n && degs.iter().all(|&d| d == 2);
        let is_path = h.m() + 1 == n && degs.iter().all(|&d| d <= 2);
        let is_claw = n == 4 && degs == [1, 1, 1, 3];
        is_cycle || is_path || is_claw
    }
}

fn first_slot(labels: &[BurgeonSlot], block: usize) -> usize {
    labels.partition_point(|s| s.block < block)
}

#[derive(Clone)]
struct Partial {
    partner: Vec<usize>,
    block: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

const NONE: usize = usize::MAX;

/// Finds a host `H` with `B(H) = G`, or `None`.
///
/// A burgeon structure is a perfect matching of cross edges whose removal
/// leaves disjoint cliques. Fixing the partner `y` of one vertex `x` forces
/// the whole block `N[x] \ {y}`, and each member's partner is then its
/// unique neighbour outside the block. Forced blocks are propagated; the
/// only branching is the choice of `y` for a vertex with no block yet.
pub fn recognize_burgeon(g: &Graph) -> Option<BurgeonWitness> {
    let n = g.n();
    let start = Partial {
        partner: vec![NONE; n],
        block: vec![NONE; n],
        blocks: Vec::new(),
    };
    let done = solve(g, start)?;
    build_witness(g, done)
}

fn candidates(g: &Graph, state: &Partial, x: usize) -> Vec<usize> {
    if state.partner[x] != NONE {
        return vec![state.partner[x]];
    }
    g.nbrs(x)
        .iter()
        .copied()
        .filter(|&y| {
            state.partner[y] == NONE
                && state.block[y] == NONE
                && g.nbrs(x).iter().filter(|&&z| z != y).all(|&z| {
                    g.nbrs(x)
                        .iter()
                        .all(|&t| t == y || t == z || g.has_edge(z, t))
                })
        })
        .collect()
}

fn solve(g: &Graph, state: Partial) -> Option<Partial> {
    let open: Vec<usize> = g.vertices().filter(|&v| state.block[v] == NONE).collect();
    if open.is_empty() {
        return Some(state);
    }
    let (x, cands) = open
        .iter()
        .map(|&x| (x, candidates(g, &state, x)))
        .min_by_key(|(_, c)| c.len())
        .expect("open is nonempty");
    for y in cands {
        let mut next = state.clone();
        if assign(g, &mut next, x, y) {
            if let Some(done) = solve(g, next) {
                return Some(done);
            }
        }
    }
    None
}

/// Puts `x` in block `N[x] \ {y}` with partner `y` and propagates every
/// forced consequence. Returns `false` on contradiction.
fn assign(g: &Graph, state: &mut Partial, x: usize, y: usize) -> bool {
    let mut queue = vec![(x, y)];
    while let Some((x, y)) = queue.pop() {
        if state.block[x] != NONE {
            if state.partner[x] != y {
                return false;
            }
            continue;
        }
        let members: Vec<usize> = std::iter::once(x)
            .chain(g.nbrs(x).iter().copied().filter(|&z| z != y))
            .collect();
        let mut in_block = FixedBitSet::with_capacity(g.n());
        for &z in &members {
            if state.block[z] != NONE {
                return false;
            }
            in_block.insert(z);
        }
        if in_block.contains(y) {
            return false;
        }
        for (i, &a) in members.iter().enumerate() {
            if members[i + 1..].iter().any(|&b| !g.has_edge(a, b)) {
                return false;
            }
        }
        let id = state.blocks.len();
        for &z in &members {
            let mut outside = g.nbrs(z).iter().copied().filter(|&t| !in_block.contains(t));
            let (Some(p), None) = (outside.next(), outside.next()) else {
                return false;
            };
            if (state.partner[z] != NONE && state.partner[z] != p)
                || (state.partner[p] != NONE && state.partner[p] != z)
            {
                return false;
            }
            state.partner[z] = p;
            state.partner[p] = z;
            state.block[z] = id;
            if state.block[p] == NONE {
                queue.push((p, z));
            }
        }
        state.blocks.push(members);
    }
    true
}

fn build_witness(g: &Graph, state: Partial) -> Option<BurgeonWitness> {
    // Host vertices ordered by smallest member.
    let mut order: Vec<usize> = (0..state.blocks.len()).collect();
    order.sort_by_key(|&b| state.blocks[b].iter().min().copied());
    let mut host_id = vec![0; state.blocks.len()];
    for (h, &b) in order.iter().enumerate() {
        host_id[b] = h;
    }
    let mut host_edges = HashSet::new();
    let mut matching = Vec::new();
    for v in g.vertices() {
        let p = state.partner[v];
        if v < p {
            let (a, b) = (host_id[state.block[v]], host_id[state.block[p]]);
            if a == b || !host_edges.insert((a.min(b), a.max(b))) {
                return None;
            }
            matching.push(Edge::new(v, p).expect("distinct"));
        }
    }
    let host = Graph::from_edges(order.len(), host_edges.iter().copied()).ok()?;
    let mut blocks = vec![Vec::new(); host.n()];
    for (h, blk) in blocks.iter_mut().enumerate() {
        let members = &state.blocks[order[h]];
        if members.len() != host.nbrs(h).len() {
            return None;
        }
        *blk = host
            .nbrs(h)
            .iter()
            .map(|&t| {
                *members
                    .iter()
                    .find(|&&z| host_id[state.block[state.partner[z]]] == t)
                    .expect("one member per host neighbour")
            })
            .collect();
    }
    matching.sort_unstable();
    let witness = BurgeonWitness {
        host,
        blocks,
        matching,
    };
    debug_assert!(witness.verify(g));
    Some(witness)
}

/// Both sides of `KB_e(B(G)) = B(L(G))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub holds: bool,
    pub kbe_of_burgeon: Graph,
    pub burgeon_of_line: Graph,
}

/// Compares `KB_e(B(G))` with `B(L(G))` up to isomorphism.
///
/// `G` must have no isolated vertex and no isolated edge: an isolated edge
/// becomes an isolated vertex of `L(G)`, whose burgeon clique would be
/// empty. This excludes `G = K_2`, where `KB_e(B(K_2)) = K_1`.
pub fn verify_burgeon_identity(g: &Graph) -> Result<IdentityCheck> {
    if let Some(v) = g.vertices().find(|&v| g.nbrs(v).is_empty()) {
        return Err(Error::IsolatedVertex(v));
    }
    if let Some(e) = g
        .edges()
        .find(|e| g.nbrs(e.u()).len() == 1 && g.nbrs(e.v()).len() == 1)
    {
        return Err(Error::IsolatedEdge(e.u(), e.v()));
    }
    let lhs = edge_biclique_graph(&burgeon_graph(g)?.graph)?.graph;
    let rhs = burgeon_graph(&line_graph(g).graph)?.graph;
    let limit = lhs.n().max(DEFAULT_CANON_LIMIT);
    let holds = is_isomorphic_bounded(&lhs, &rhs, limit)?;
    Ok(IdentityCheck {
        holds,
        kbe_of_burgeon: lhs,
        burgeon_of_line: rhs,
    })
}
