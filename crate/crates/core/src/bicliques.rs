//! Bicliques: maximal induced complete bipartite subgraphs.
//!
//! Enumeration seeds every edge `v-w` with `v < w` and grows the biclique in
//! which `v` is the smallest vertex and `w` the smallest vertex of the other
//! side. Within a seed the candidates form a compatibility graph (two vertices
//! on the same side must be non-adjacent, on opposite sides adjacent), and
//! the bicliques are its maximal cliques, found by Bron–Kerbosch with
//! pivoting. Vertices that would violate the seed's minimality start in the
//! excluded set, so each biclique is reported exactly once.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Default bound on the number of bicliques enumerated before giving up.
pub const DEFAULT_BICLIQUE_CAP: usize = 1_000_000;

/// Vertex bound for the exhaustive subset oracle.
pub const ORACLE_LIMIT: usize = 16;

/// A biclique `(left, right)`. Both sides are sorted and `left` is the side
/// holding the smallest vertex, which makes the pair canonical.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Biclique {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Biclique {
    /// Normalizes the bipartition. Does not check that it is a biclique.
    pub fn new(mut a: Vec<usize>, mut b: Vec<usize>) -> Biclique {
        a.sort_unstable();
        b.sort_unstable();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        Biclique { left: a, right: b }
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sorted vertex set.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.left.iter().chain(&self.right).copied().collect();
        vs.sort_unstable();
        vs
    }

    pub fn contains(&self, v: usize) -> bool {
        self.left.binary_search(&v).is_ok() || self.right.binary_search(&v).is_ok()
    }

    /// The edges `left × right`, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut es: Vec<Edge> = self
            .left
            .iter()
            .flat_map(|&u| {
                self.right
                    .iter()
                    .map(move |&w| Edge::new(u, w).expect("disjoint"))
            })
            .collect();
        es.sort_unstable();
        es
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        let (a, b) = e.endpoints();
        let l = |x: usize| self.left.binary_search(&x).is_ok();
        let r = |x: usize| self.right.binary_search(&x).is_ok();
        (l(a) && r(b)) || (l(b) && r(a))
    }

    /// `K_{p,q}` shape with `p <= q`.
    pub fn shape(&self) -> (usize, usize) {
        let (p, q) = (self.left.len(), self.right.len());
        (p.min(q), p.max(q))
    }
}

impl fmt::Display for Biclique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[usize]| {
            s.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{} | {}", join(&self.left), join(&self.right))
    }
}

/// All bicliques of a graph in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BicliqueSet(Vec<Biclique>);

impl BicliqueSet {
    /// Sorts and drops entries with a repeated vertex set.
    pub fn from_vec(mut v: Vec<Biclique>) -> BicliqueSet {
        v.sort_unstable();
        v.dedup_by(|a, b| a.vertices() == b.vertices());
        BicliqueSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Biclique> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Biclique] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Biclique> {
        self.0
    }
}

impl<'a> IntoIterator for &'a BicliqueSet {
    type Item = &'a Biclique;
    type IntoIter = std::slice::Iter<'a, Biclique>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// `true` iff `u` and `w` are nonempty, disjoint, independent, and completely
/// joined to each other. Out-of-range vertices make it `false`.
pub fn is_induced_complete_bipartite(g: &Graph, u: &[usize], w: &[usize]) -> bool {
    if u.is_empty() || w.is_empty() {
        return false;
    }
    let n = g.n();
    if u.iter().chain(w).any(|&x| x >= n) {
        return false;
    }
    let independent = |s: &[usize]| {
        s.iter()
            .enumerate()
            .all(|(i, &a)| s[i + 1..].iter().all(|&b| a != b && !g.has_edge(a, b)))
    };
    independent(u)
        && independent(w)
        && u.iter()
            .all(|&a| w.iter().all(|&b| a != b && g.has_edge(a, b)))
}

/// `true` iff `(u, w)` is an induced complete bipartite subgraph to which no
/// single vertex can be added on either side.
pub fn is_maximal_biclique(g: &Graph, u: &[usize], w: &[usize]) -> bool {
    if !is_induced_complete_bipartite(g, u, w) {
        return false;
    }
    let extends = |x: usize, same: &[usize], other: &[usize]| {
        same.iter().all(|&s| !g.has_edge(x, s)) && other.iter().all(|&o| g.has_edge(x, o))
    };
    g.vertices()
        .filter(|x| !u.contains(x) && !w.contains(x))
        .all(|x| !extends(x, u, w) && !extends(x, w, u))
}

pub fn enumerate_bicliques(g: &Graph) -> Result<BicliqueSet> {
    enumerate_bicliques_capped(g, DEFAULT_BICLIQUE_CAP)
}

/// Enumerates bicliques, failing with [`Error::BicliqueCapExceeded`] once more
/// than `cap` have been found.
pub fn enumerate_bicliques_capped(g: &Graph, cap: usize) -> Result<BicliqueSet> {
    let mut out = Vec::new();
    let n = g.n();
    for v in 0..n {
        for &w in g.nbrs(v) {
            if w <= v {
                continue;
            }
            let mut seed = Seed::new(g, v, w, cap, &mut out);
            seed.run()?;
        }
    }
    out.sort_unstable();
    Ok(BicliqueSet(out))
}

struct Seed<'a> {
    g: &'a Graph,
    /// Candidates adjacent to `v` go to `v`'s opposite side.
    opposite: FixedBitSet,
    left: Vec<usize>,
    right: Vec<usize>,
    cap: usize,
    out: &'a mut Vec<Biclique>,
}

impl<'a> Seed<'a> {
    fn new(g: &'a Graph, v: usize, w: usize, cap: usize, out: &'a mut Vec<Biclique>) -> Self {
        Seed {
            g,
            opposite: g.row(v).clone(),
            left: vec![v],
            right: vec![w],
            cap,
            out,
        }
    }

    fn run(&mut self) -> Result<()> {
        let g = self.g;
        let (v, w) = (self.left[0], self.right[0]);
        let n = g.n();
        // Left candidates: N(w) \ N[v]; right candidates: N(v) \ N[w].
        let mut left_cand = g.row(w).clone();
        left_cand.difference_with(g.row(v));
        left_cand.set(v, false);
        let mut right_cand = g.row(v).clone();
        right_cand.difference_with(g.row(w));
        right_cand.set(w, false);

        let mut p = FixedBitSet::with_capacity(n);
        let mut x = FixedBitSet::with_capacity(n);
        for c in left_cand.ones() {
            if c > v {
                p.insert(c)
            } else {
                x.insert(c)
            }
        }
        for c in right_cand.ones() {
            if c > w {
                p.insert(c)
            } else {
                x.insert(c)
            }
        }
        self.bron_kerbosch(p, x)
    }

    /// Vertices compatible with `c` in the seed's compatibility graph.
    fn compatible(&self, c: usize) -> FixedBitSet {
        // Same side iff adjacency to v agrees; then compat = adj XOR same-side.
        let mut same = self.opposite.clone();
        if !self.opposite.contains(c) {
            same.toggle_range(..);
        }
        let mut out = self.g.row(c).clone();
        out.symmetric_difference_with(&same);
        out.set(c, false);
        out
    }

    fn bron_kerbosch(&mut self, mut p: FixedBitSet, mut x: FixedBitSet) -> Result<()> {
        if p.is_clear() {
            if x.is_clear() {
                if self.out.len() >= self.cap {
                    return Err(Error::BicliqueCapExceeded { cap: self.cap });
                }
                self.out
                    .push(Biclique::new(self.left.clone(), self.right.clone()));
            }
            return Ok(());
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| p.intersection_count(&self.compatible(u)))
            .expect("p is nonempty");
        let mut branch = p.clone();
        branch.difference_with(&self.compatible(pivot));
        for c in branch.ones() {
            let compat = self.compatible(c);
            let mut p2 = p.clone();
            p2.intersect_with(&compat);
            let mut x2 = x.clone();
            x2.intersect_with(&compat);
            let side_right = self.opposite.contains(c);
            if side_right {
                self.right.push(c);
            } else {
                self.left.push(c);
            }
            let r = self.bron_kerbosch(p2, x2);
            if side_right {
                self.right.pop();
            } else {
                self.left.pop();
            }
            r?;
            p.set(c, false);
            x.insert(c);
        }
        Ok(())
    }
}

/// Exhaustive subset oracle: keeps every vertex subset of size at least two
/// that induces a connected complete bipartite graph and cannot be extended
/// by one vertex. Only for `n <= 16`.
pub fn enumerate_bicliques_oracle(g: &Graph) -> Result<BicliqueSet> {
    let n = g.n();
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            what: "biclique subset oracle",
            n,
            limit: ORACLE_LIMIT,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.nbrs(v).iter().fold(0u32, |acc, &u| acc | 1 << u))
        .collect();
    // Returns the bipartition when `mask` induces a connected complete
    // bipartite graph.
    let split = |mask: u32| -> Option<(u32, u32)> {
        let start = mask.trailing_zeros() as usize;
        let mut side = [0u32; 2];
        side[0] = 1 << start;
        let mut frontier = vec![(start, 0usize)];
        let mut seen = 1u32 << start;
        while let Some((v, s)) = frontier.pop() {
            let mut nb = adj[v] & mask & !seen;
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << u;
                side[1 - s] |= 1 << u;
                frontier.push((u, 1 - s));
            }
        }
        if seen != mask || side[1] == 0 {
            return None;
        }
        let ok = (0..n).filter(|&v| mask >> v & 1 == 1).all(|v| {
            let s = if side[0] >> v & 1 == 1 { 0 } else { 1 };
            adj[v] & mask == side[1 - s]
        });
        ok.then_some((side[0], side[1]))
    };
    let bits = |m: u32| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        if split(mask).is_none() {
            continue;
        }
        let maximal = (0..n)
            .filter(|&x| mask >> x & 1 == 0)
            .all(|x| split(mask | 1 << x).is_none());
        if maximal {
            let (a, b) = split(mask).expect("checked above");
            out.push(Biclique::new(bits(a), bits(b)));
        }
    }
    Ok(BicliqueSet::from_vec(out))
}
