//! Canonical labeling by colour refinement plus individualization search.
//!
//! Every node of the search tree is an ordered partition of the vertices,
//! kept equitable by refinement. Leaves are discrete partitions, hence
//! labelings; the canonical form is the largest adjacency key over all
//! leaves. Automorphisms discovered at equal leaves prune the tree: a
//! subtree that is the image of an explored one is skipped, and at every
//! node children in the same orbit (under the automorphisms fixing the
//! node's prefix) are explored once.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex bound for [`canonical_form`].
pub const DEFAULT_CANON_LIMIT: usize = 64;

/// Total-order key such that two graphs have equal keys iff they are
/// isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_bounded(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_bounded(g: &Graph, limit: usize) -> Result<CanonicalForm> {
    let lab = search(g, limit)?;
    Ok(CanonicalForm(leaf_key(g, &lab)))
}

/// A permutation `perm` with `g.relabel(&perm)` canonical: isomorphic
/// graphs map to identical graphs.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let lab = search(g, DEFAULT_CANON_LIMIT)?;
    let mut perm = vec![0; lab.len()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic_bounded(g, h, DEFAULT_CANON_LIMIT)
}

pub fn is_isomorphic_bounded(g: &Graph, h: &Graph, limit: usize) -> Result<bool> {
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form_bounded(g, limit)? == canonical_form_bounded(h, limit)?)
}

fn search(g: &Graph, limit: usize) -> Result<Vec<usize>> {
    if g.n() > limit {
        return Err(Error::TooLarge {
            what: "canonical form",
            n: g.n(),
            limit,
        });
    }
    let mut colors = vec![0u32; g.n()];
    refine(g, &mut colors);
    let mut s = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    s.descend(colors, &mut Vec::new());
    Ok(s.best.map(|l| l.lab).unwrap_or_default())
}

fn count_cells(colors: &[u32]) -> usize {
    let mut seen = vec![false; colors.len()];
    colors
        .iter()
        .filter(|&&c| !std::mem::replace(&mut seen[c as usize], true))
        .count()
}

/// Splits cells until the partition is equitable. Colours are cell start
/// positions, so the cell order is part of the (label-independent) state.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = colors.len();
    let mut cells = count_cells(colors);
    let mut order: Vec<usize> = (0..n).collect();
    let mut sigs: Vec<Vec<u32>> = vec![Vec::new(); n];
    while cells < n {
        for (v, sig) in sigs.iter_mut().enumerate() {
            sig.clear();
            sig.extend(g.nbrs(v).iter().map(|&u| colors[u]));
            sig.sort_unstable();
        }
        order.sort_by(|&a, &b| {
            colors[a]
                .cmp(&colors[b])
                .then_with(|| sigs[a].cmp(&sigs[b]))
        });
        let mut next = vec![0u32; n];
        let mut start = 0;
        for i in 1..=n {
            let boundary = i == n || {
                let (a, b) = (order[i - 1], order[i]);
                colors[a] != colors[b] || sigs[a] != sigs[b]
            };
            if boundary {
                for &v in &order[start..i] {
                    next[v] = start as u32;
                }
                start = i;
            }
        }
        colors.copy_from_slice(&next);
        let now = count_cells(colors);
        if now == cells {
            break;
        }
        cells = now;
    }
}

fn leaf_key(g: &Graph, lab: &[usize]) -> Vec<u8> {
    let n = lab.len();
    let mut key = Vec::with_capacity(4 + n * n / 16);
    key.extend_from_slice(&(n as u32).to_be_bytes());
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.row(lab[j]);
        for &li in &lab[..j] {
            acc = (acc << 1) | row.contains(li) as u8;
            filled += 1;
            if filled == 8 {
                key.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        key.push(acc << (8 - filled));
    }
    key
}

struct Leaf {
    key: Vec<u8>,
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    /// Returns `Some(level)` to abandon the search up to the node at depth
    /// `level`, which then resumes with its next child.
    fn descend(&mut self, colors: Vec<u32>, path: &mut Vec<usize>) -> Option<usize> {
        let n = colors.len();
        let mut size = vec![0usize; n];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = (0..n)
            .filter(|&c| size[c] > 1)
            .min_by_key(|&c| (size[c], c));
        let Some(target) = target else {
            return self.leaf(&colors, path);
        };

        let level = path.len();
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if !tried.is_empty() && self.same_orbit_as_tried(path, v, &tried) {
                continue;
            }
            tried.push(v);
            let mut child = colors.clone();
            for &u in &members {
                if u != v {
                    child[u] = target as u32 + 1;
                }
            }
            refine(self.g, &mut child);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(j) = jump {
                if j < level {
                    return Some(j);
                }
            }
        }
        None
    }

    fn same_orbit_as_tried(&self, path: &[usize], v: usize, tried: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut any = false;
        for a in &self.autos {
            if path.iter().all(|&p| a[p] == p) {
                any = true;
                for (x, &y) in a.iter().enumerate() {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }

    fn leaf(&mut self, colors: &[u32], path: &[usize]) -> Option<usize> {
        let mut lab = vec![0; colors.len()];
        for (v, &c) in colors.iter().enumerate() {
            lab[c as usize] = v;
        }
        let key = leaf_key(self.g, &lab);
        let leaf = Leaf {
            key,
            lab,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                key: leaf.key.clone(),
                lab: leaf.lab.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        if leaf.key == first.key {
            let jump = common_prefix(path, &first.path);
            let auto = automorphism(&first.lab, &leaf.lab);
            self.record(auto);
            return Some(jump);
        }
        let best = self.best.as_ref().expect("best set with first");
        if leaf.key == best.key {
            let jump = common_prefix(path, &best.path);
            let auto = automorphism(&best.lab, &leaf.lab);
            self.record(auto);
            return Some(jump);
        }
        if leaf.key > best.key {
            self.best = Some(leaf);
        }
        None
    }

    fn record(&mut self, auto: Vec<usize>) {
        if auto.iter().enumerate().any(|(i, &x)| i != x) && !self.autos.contains(&auto) {
            self.autos.push(auto);
        }
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut p = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        p[a] = b;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn distinguishes_c4_and_p4() {
        let c4 = named::cycle(4).unwrap();
        let p4 = named::path(4).unwrap();
        assert!(!is_isomorphic(&c4, &p4).unwrap());
        assert_ne!(canonical_form(&c4).unwrap(), canonical_form(&p4).unwrap());
    }

    #[test]
    fn relabeled_c5_has_same_key() {
        let c5 = named::cycle(5).unwrap();
        let h = c5.relabel(&[3, 0, 4, 1, 2]).unwrap();
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn canonical_labeling_yields_identical_graphs() {
        let g = named::necklace(6, 2).unwrap();
        let h = g.relabel(&[7, 2, 5, 0, 1, 3, 6, 4]).unwrap();
        let cg = g.relabel(&canonical_labeling(&g).unwrap()).unwrap();
        let ch = h.relabel(&canonical_labeling(&h).unwrap()).unwrap();
        assert_eq!(cg, ch);
    }

    #[test]
    fn symmetric_graphs_finish() {
        // Vertex-transitive and empty graphs stress the automorphism pruning.
        for g in [
            Graph::empty(60),
            named::complete(40),
            named::complete_bipartite(20, 20).unwrap(),
            named::cycle(64).unwrap(),
            named::petersen(),
        ] {
            canonical_form(&g).unwrap();
        }
    }

    #[test]
    fn size_bound() {
        assert!(matches!(
            canonical_form(&Graph::empty(65)),
            Err(Error::TooLarge { .. })
        ));
        assert!(canonical_form_bounded(&Graph::empty(65), 100).is_ok());
    }

    #[test]
    fn petersen_vs_other_cubic() {
        // Both cubic on ten vertices.
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 1) % 5));
            edges.push((i, i + 5));
        }
        let prism = Graph::from_edges(10, edges).unwrap();
        assert!(!is_isomorphic(&named::petersen(), &prism).unwrap());
    }
}
