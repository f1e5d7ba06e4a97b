//! Small exhaustive graph corpora for tests. Connected graphs on `n`
//! vertices are grown from those on `n - 1` by adding a vertex with every
//! nonempty neighbourhood and discarding isomorphic duplicates; every
//! connected graph has a vertex whose removal keeps it connected, so nothing
//! is missed. Counts are checked against published sequences.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::OnceLock;

use kbe_core::graph::{canonical_form, CanonicalForm};
use kbe_core::Graph;

/// Connected unlabeled graphs, n = 1..=8.
pub const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];
/// Unlabeled trees, n = 1..=10.
pub const TREE_COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];

fn extend<F>(prev: &[Graph], keep: F) -> Vec<Graph>
where
    F: Fn(&Graph, &[usize]) -> bool,
{
    let mut out: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for g in prev {
        let n = g.n();
        for mask in 1u32..(1 << n) {
            let nbrs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !keep(g, &nbrs) {
                continue;
            }
            let h = Graph::from_edges(
                n + 1,
                g.edge_list()
                    .into_iter()
                    .chain(nbrs.iter().map(|&v| (v, n))),
            )
            .unwrap();
            let cf = canonical_form(&h).unwrap();
            out.entry(cf).or_insert(h);
        }
    }
    out.into_values().collect()
}

fn grow<F>(max_n: usize, keep: F) -> Vec<Vec<Graph>>
where
    F: Fn(&Graph, &[usize]) -> bool,
{
    let mut levels = vec![Vec::new(), vec![Graph::empty(1)]];
    for _ in 2..=max_n {
        let next = extend(levels.last().unwrap(), &keep);
        levels.push(next);
    }
    levels
}

/// `connected(n)` lists the connected graphs on `n <= 8` vertices.
pub fn connected(n: usize) -> &'static [Graph] {
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    &LEVELS.get_or_init(|| grow(8, |_, _| true))[n]
}

pub fn connected_up_to(max_n: usize) -> impl Iterator<Item = &'static Graph> {
    (1..=max_n).flat_map(connected)
}

pub fn trees(n: usize) -> &'static [Graph] {
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    &LEVELS.get_or_init(|| grow(10, |_, nbrs| nbrs.len() == 1))[n]
}

/// BFS distances from `s`; `usize::MAX` when unreachable.
fn distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v).unwrap() {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Connected graphs with girth at least five (trees included), `n <= 10`.
/// A new vertex closes a cycle of length `d + 2` through two neighbours at
/// distance `d`, so its neighbours must be pairwise at distance >= 3.
pub fn girth5(n: usize) -> &'static [Graph] {
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    &LEVELS.get_or_init(|| {
        grow(10, |g, nbrs| {
            nbrs.iter().enumerate().all(|(i, &a)| {
                let d = distances(g, a);
                nbrs[i + 1..].iter().all(|&b| d[b] >= 3)
            })
        })
    })[n]
}

/// Calls `f` once per connected graph on 9 vertices (261080 of them),
/// without keeping the graphs in memory.
pub fn for_each_connected_9<F: FnMut(&Graph)>(mut f: F) {
    let mut seen = std::collections::HashSet::new();
    for g in connected(8) {
        for mask in 1u32..(1 << 8) {
            let h = Graph::from_edges(
                9,
                g.edge_list()
                    .into_iter()
                    .chain((0..8).filter(|&v| mask >> v & 1 == 1).map(|v| (v, 8))),
            )
            .unwrap();
            if seen.insert(canonical_form(&h).unwrap()) {
                f(&h);
            }
        }
    }
}
