//! Induced cycles, the good-neighbours property and induced necklaces, the
//! certificates behind divergence verdicts.

use std::fmt;
use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::bicliques::Biclique;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::operators::LabeledGraph;

/// An induced cycle `v_0 v_1 ... v_{n-1}`, `n >= 3`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InducedCycle(Vec<usize>);

impl InducedCycle {
    /// Checks that `vertices`, in order, form an induced cycle of `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<InducedCycle> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidCycle(format!("length {n} is below 3")));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        let mut seen = FixedBitSet::with_capacity(g.n());
        for &v in &vertices {
            if seen.put(v) {
                return Err(Error::InvalidCycle(format!("vertex {v} repeats")));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let consecutive = j == i + 1 || (i == 0 && j == n - 1);
                if g.has_edge(vertices[i], vertices[j]) != consecutive {
                    return Err(Error::InvalidCycle(if consecutive {
                        format!("{} and {} are not adjacent", vertices[i], vertices[j])
                    } else {
                        format!("chord {}-{}", vertices[i], vertices[j])
                    }));
                }
            }
        }
        Ok(InducedCycle(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `v_i` with the index taken mod `n`.
    pub fn at(&self, i: isize) -> usize {
        let n = self.0.len() as isize;
        self.0[i.rem_euclid(n) as usize]
    }

    /// The same cycle starting at its smallest vertex, oriented so that the
    /// second vertex is the smaller of its two neighbours.
    pub fn canonical(&self) -> InducedCycle {
        let n = self.0.len();
        let start = (0..n).min_by_key(|&i| self.0[i]).expect("nonempty");
        let fwd: Vec<usize> = (0..n).map(|k| self.0[(start + k) % n]).collect();
        if fwd[1] < fwd[n - 1] {
            InducedCycle(fwd)
        } else {
            let mut rev = vec![fwd[0]];
            rev.extend(fwd[1..].iter().rev());
            InducedCycle(rev)
        }
    }
}

impl fmt::Display for InducedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// True iff no vertex outside the cycle is adjacent to `v_{i-1}` and
/// `v_{i+1}` without also being adjacent to `v_i`.
pub fn has_good_neighbors(g: &Graph, cycle: &InducedCycle) -> Result<bool> {
    let cycle = InducedCycle::new(g, cycle.0.clone())?;
    Ok(good_neighbors_unchecked(g, &cycle))
}

fn good_neighbors_unchecked(g: &Graph, cycle: &InducedCycle) -> bool {
    let mut on_cycle = FixedBitSet::with_capacity(g.n());
    for &v in cycle.vertices() {
        on_cycle.insert(v);
    }
    let n = cycle.len() as isize;
    (0..n).all(|i| {
        let mut bad = g.row(cycle.at(i - 1)).clone();
        bad.intersect_with(g.row(cycle.at(i + 1)));
        bad.difference_with(g.row(cycle.at(i)));
        bad.difference_with(&on_cycle);
        bad.is_clear()
    })
}

/// Limits for [`find_induced_cycles_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleLimits {
    pub max_cycles: usize,
    /// Path extensions tried before giving up.
    pub max_work: usize,
}

impl Default for CycleLimits {
    fn default() -> Self {
        CycleLimits {
            max_cycles: 10_000,
            max_work: 20_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSearch {
    /// Canonical cycles ordered by length, then lexicographically.
    pub cycles: Vec<InducedCycle>,
    /// Set when a limit stopped the search; `cycles` may then be incomplete.
    pub truncated: bool,
}

/// All induced cycles with `min_len <= length <= max_len`, up to `budget`
/// cycles.
pub fn find_induced_cycles(
    g: &Graph,
    min_len: usize,
    max_len: usize,
    budget: usize,
) -> Result<CycleSearch> {
    let limits = CycleLimits {
        max_cycles: budget,
        ..CycleLimits::default()
    };
    find_induced_cycles_with(g, min_len, max_len, &limits)
}

pub fn find_induced_cycles_with(
    g: &Graph,
    min_len: usize,
    max_len: usize,
    limits: &CycleLimits,
) -> Result<CycleSearch> {
    check_lengths(min_len, max_len)?;
    let mut walker = Walker::new(g, limits.max_work);
    let mut cycles = Vec::new();
    let mut truncated = false;
    for len in min_len..=max_len {
        let flow = walker.each_cycle(len, &mut |c| {
            if cycles.len() == limits.max_cycles {
                return ControlFlow::Break(());
            }
            cycles.push(InducedCycle(c.to_vec()));
            ControlFlow::Continue(())
        });
        if flow.is_break() {
            truncated = true;
            break;
        }
    }
    Ok(CycleSearch { cycles, truncated })
}

fn check_lengths(min_len: usize, max_len: usize) -> Result<()> {
    if min_len < 3 || min_len > max_len {
        return Err(Error::InvalidParameter {
            name: "cycle lengths".into(),
            message: format!("need 3 <= min_len <= max_len, got {min_len}..{max_len}"),
        });
    }
    Ok(())
}

/// Depth-first search over chordless paths. A cycle is reported once, from
/// its smallest vertex, in the orientation where the second vertex is the
/// smaller neighbour of the first.
struct Walker<'a> {
    g: &'a Graph,
    work: usize,
    max_work: usize,
}

impl<'a> Walker<'a> {
    fn new(g: &'a Graph, max_work: usize) -> Self {
        Walker {
            g,
            work: 0,
            max_work,
        }
    }

    /// Breaks when the callback breaks or the work limit runs out.
    fn each_cycle(
        &mut self,
        len: usize,
        f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let mut path = Vec::with_capacity(len);
        for s in self.g.vertices() {
            path.push(s);
            self.extend(&mut path, len, f)?;
            path.pop();
        }
        ControlFlow::Continue(())
    }

    fn extend(
        &mut self,
        path: &mut Vec<usize>,
        len: usize,
        f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let g = self.g;
        let s = path[0];
        let last = *path.last().expect("nonempty path");
        let j = path.len();
        for &x in g.nbrs(last) {
            self.work += 1;
            if self.work > self.max_work {
                return ControlFlow::Break(());
            }
            if x <= s || path.contains(&x) {
                continue;
            }
            if j >= 2 && path[1..j - 1].iter().any(|&p| g.has_edge(x, p)) {
                continue;
            }
            let closes = j >= 2 && g.has_edge(x, s);
            if closes {
                if j + 1 == len && path[1] < x {
                    path.push(x);
                    let r = f(path);
                    path.pop();
                    r?;
                }
            } else if j + 1 < len {
                path.push(x);
                let r = self.extend(path, len, f);
                path.pop();
                r?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// An induced `(n, m)`-necklace: the cycle, the index `i` of the cycle edge
/// `v_i v_{i+1}`, and the `m` clique vertices attached to it. The cycle has
/// good neighbours in the host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecklaceCertificate {
    pub cycle: InducedCycle,
    pub anchor: usize,
    pub pendants: Vec<usize>,
}

impl NecklaceCertificate {
    /// `(n, m)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.cycle.len(), self.pendants.len())
    }

    pub fn anchor_edge(&self) -> (usize, usize) {
        let i = self.anchor as isize;
        (self.cycle.at(i), self.cycle.at(i + 1))
    }
}

impl fmt::Display for NecklaceCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, m) = self.shape();
        let (a, b) = self.anchor_edge();
        let p: Vec<String> = self.pendants.iter().map(usize::to_string).collect();
        write!(
            f,
            "({n},{m})-necklace: cycle [{}], anchor {a}-{b}, pendants [{}]",
            self.cycle,
            p.join(" ")
        )
    }
}

/// Re-validates a certificate from scratch.
pub fn is_induced_necklace(g: &Graph, cert: &NecklaceCertificate) -> bool {
    let Ok(cycle) = InducedCycle::new(g, cert.cycle.0.clone()) else {
        return false;
    };
    let n = cycle.len();
    if n < 5 || cert.anchor >= n || cert.pendants.is_empty() {
        return false;
    }
    let (a, b) = cert.anchor_edge();
    let p = &cert.pendants;
    for (k, &x) in p.iter().enumerate() {
        if x >= g.n() || cycle.vertices().contains(&x) || p[..k].contains(&x) {
            return false;
        }
        if p[..k].iter().any(|&y| !g.has_edge(x, y)) {
            return false;
        }
        let touches: Vec<usize> = cycle
            .vertices()
            .iter()
            .copied()
            .filter(|&c| g.has_edge(x, c))
            .collect();
        let mut want = vec![a, b];
        want.sort_unstable();
        let mut got = touches;
        got.sort_unstable();
        if got != want {
            return false;
        }
    }
    good_neighbors_unchecked(g, &cycle)
}

/// Parameters of the bounded certificate search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecklaceSearch {
    pub min_cycle_len: usize,
    pub max_cycle_len: usize,
    pub limits: CycleLimits,
    /// Only anchors carrying a clique of at least this many pendants count.
    pub min_pendants: usize,
}

impl Default for NecklaceSearch {
    fn default() -> Self {
        NecklaceSearch {
            min_cycle_len: 5,
            max_cycle_len: 12,
            limits: CycleLimits::default(),
            min_pendants: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecklaceOutcome {
    pub certificate: Option<NecklaceCertificate>,
    /// False when the cycle search was cut short, in which case a missing
    /// certificate proves nothing.
    pub exhaustive: bool,
}

/// Looks for an induced necklace with `n >= 5` whose cycle has good
/// neighbours. Cycles are tried shortest first; at the first anchor edge
/// that qualifies the largest pendant clique found is returned.
pub fn find_necklace_certificate(g: &Graph, search: &NecklaceSearch) -> Result<NecklaceOutcome> {
    check_lengths(search.min_cycle_len, search.max_cycle_len)?;
    if search.min_cycle_len < 5 {
        return Err(Error::InvalidParameter {
            name: "necklace search".into(),
            message: "necklace cycles have length at least 5".into(),
        });
    }
    let mut walker = Walker::new(g, search.limits.max_work);
    let mut seen = 0usize;
    let mut found = None;
    let mut truncated = false;
    for len in search.min_cycle_len..=search.max_cycle_len {
        let flow = walker.each_cycle(len, &mut |c| {
            if seen == search.limits.max_cycles {
                truncated = true;
                return ControlFlow::Break(());
            }
            seen += 1;
            let cycle = InducedCycle(c.to_vec());
            match certify(g, &cycle, search.min_pendants) {
                Some(cert) => {
                    found = Some(cert);
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            }
        });
        if flow.is_break() {
            if found.is_none() {
                truncated = true;
            }
            break;
        }
    }
    Ok(NecklaceOutcome {
        exhaustive: found.is_some() || !truncated,
        certificate: found,
    })
}

fn certify(g: &Graph, cycle: &InducedCycle, min_pendants: usize) -> Option<NecklaceCertificate> {
    if !good_neighbors_unchecked(g, cycle) {
        return None;
    }
    let n = cycle.len();
    let mut on_cycle = FixedBitSet::with_capacity(g.n());
    for &v in cycle.vertices() {
        on_cycle.insert(v);
    }
    for i in 0..n {
        let (a, b) = (cycle.at(i as isize), cycle.at(i as isize + 1));
        let eligible: Vec<usize> = g
            .nbrs(a)
            .iter()
            .copied()
            .filter(|&x| !on_cycle.contains(x) && g.has_edge(x, b))
            .filter(|&x| {
                cycle
                    .vertices()
                    .iter()
                    .all(|&c| c == a || c == b || !g.has_edge(x, c))
            })
            .collect();
        if eligible.len() < min_pendants {
            continue;
        }
        let pendants = max_clique(g, &eligible);
        if pendants.len() >= min_pendants {
            return Some(NecklaceCertificate {
                cycle: cycle.clone(),
                anchor: i,
                pendants,
            });
        }
    }
    None
}

const CLIQUE_NODE_LIMIT: usize = 100_000;

/// A maximum clique among `cands` (sorted), by branch and bound. After
/// `CLIQUE_NODE_LIMIT` nodes the best clique so far is returned.
fn max_clique(g: &Graph, cands: &[usize]) -> Vec<usize> {
    let k = cands.len();
    let local: Vec<FixedBitSet> = cands
        .iter()
        .map(|&x| {
            let mut row = FixedBitSet::with_capacity(k);
            for (j, &y) in cands.iter().enumerate() {
                if g.has_edge(x, y) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    let mut best = Vec::new();
    let mut nodes = 0;
    let mut all = FixedBitSet::with_capacity(k);
    all.insert_range(..);
    grow(&local, &mut Vec::new(), all, &mut best, &mut nodes);
    let mut out: Vec<usize> = best.into_iter().map(|j| cands[j]).collect();
    out.sort_unstable();
    out
}

fn grow(
    local: &[FixedBitSet],
    current: &mut Vec<usize>,
    mut p: FixedBitSet,
    best: &mut Vec<usize>,
    nodes: &mut usize,
) {
    *nodes += 1;
    if current.len() > best.len() {
        *best = current.clone();
    }
    if *nodes > CLIQUE_NODE_LIMIT {
        return;
    }
    while let Some(v) = p.minimum() {
        if current.len() + p.count_ones(..) <= best.len() {
            return;
        }
        p.set(v, false);
        let mut next = p.clone();
        next.intersect_with(&local[v]);
        current.push(v);
        grow(local, current, next, best, nodes);
        current.pop();
    }
}

/// Lifts an induced cycle of `G` to `KB_e(G)`: `b_i` is the first biclique
/// (in the vertex order of `kbe`) containing `v_{i-1}, v_i, v_{i+1}`. Fails
/// when some `b_i` does not exist or the lifted sequence is not an induced
/// cycle.
pub fn lift_cycle(kbe: &LabeledGraph<Biclique>, cycle: &InducedCycle) -> Result<InducedCycle> {
    let n = cycle.len() as isize;
    let mut lifted = Vec::with_capacity(cycle.len());
    for i in 0..n {
        let want = [cycle.at(i - 1), cycle.at(i), cycle.at(i + 1)];
        let b = kbe
            .labels
            .iter()
            .position(|b| want.iter().all(|&v| b.contains(v)))
            .ok_or_else(|| {
                Error::InvalidCycle(format!(
                    "no biclique contains {} {} {}",
                    want[0], want[1], want[2]
                ))
            })?;
        lifted.push(b);
    }
    InducedCycle::new(&kbe.graph, lifted)
}
