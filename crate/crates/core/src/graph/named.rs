//! Builders for the small named graphs used throughout the crate.
//!
//! Numbering conventions:
//! - `cycle(n)`: `0-1-…-(n-1)-0`.
//! - `path(k)`: `0-1-…-(k-1)`.
//! - `star(k)`: center `0`, leaves `1..=k`.
//! - `complete_bipartite(p, q)`: sides `0..p` and `p..p+q`.
//! - `necklace(n, m)`: cycle `0..n`, clique `n..n+m` attached to edge `0-1`.
//! - `cycle_with_tail(n, k)`: cycle `0..n`, tail `n..n+k` hanging from `0`.
//! - `net()`: triangle `0,1,2`, pendants `3,4,5` on `0,1,2`.
//! - `paw()`: triangle `0,1,2`, pendant `3` on `2`.
//! - `chair()`: star on `0` with leaves `1,2,3`, and `4` attached to `3`.
//! - `diamond()`: `K4` minus the edge `0-3`.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(name: &str, message: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name: name.to_string(),
        message: message.into(),
    }
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("valid")
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 {
        return Err(invalid("complete_bipartite", "both sides must be nonempty"));
    }
    let edges = (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v)));
    Graph::from_edges(p + q, edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle", "need n >= 3"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `P_k`, the path on `k` vertices.
pub fn path(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(invalid("path", "need k >= 1"));
    }
    Graph::from_edges(k, (1..k).map(|i| (i - 1, i)))
}

/// `K_{1,k}`.
pub fn star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(invalid("star", "need k >= 1"));
    }
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
}

/// The `(n,m)`-necklace: an induced `C_n` plus a `K_m` whose vertices are
/// adjacent to exactly the endpoints of the cycle edge `0-1`.
pub fn necklace(n: usize, m: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("necklace", "cycle length must be at least 3"));
    }
    if m == 0 {
        return Err(invalid("necklace", "clique size must be at least 1"));
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for p in n..n + m {
        edges.push((0, p));
        edges.push((1, p));
        for q in (p + 1)..n + m {
            edges.push((p, q));
        }
    }
    Graph::from_edges(n + m, edges)
}

/// `C_n` with a pendant path of `k` vertices hanging from vertex `0`.
pub fn cycle_with_tail(n: usize, k: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(
            "cycle_with_tail",
            "cycle length must be at least 3",
        ));
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for t in 0..k {
        let prev = if t == 0 { 0 } else { n + t - 1 };
        edges.push((prev, n + t));
    }
    Graph::from_edges(n + k, edges)
}

pub fn net() -> Graph {
    Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]).expect("valid")
}

pub fn paw() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).expect("valid")
}

pub fn chair() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).expect("valid")
}

pub fn diamond() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("valid")
}

/// The complement of `C_7`: `i ~ j` iff `j - i ∉ {±1} (mod 7)`.
pub fn complement_c7() -> Graph {
    cycle(7).expect("valid").complement()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("valid")
}

/// Names accepted by [`build_named`], with their parameter counts.
pub const NAMES: &[(&str, usize)] = &[
    ("complete", 1),
    ("complete_bipartite", 2),
    ("cycle", 1),
    ("path", 1),
    ("star", 1),
    ("necklace", 2),
    ("cycle_with_tail", 2),
    ("net", 0),
    ("paw", 0),
    ("chair", 0),
    ("diamond", 0),
    ("complement_c7", 0),
    ("petersen", 0),
    ("empty", 1),
];

/// Builds a named graph from its name and integer parameters.
pub fn build_named(name: &str, params: &[usize]) -> Result<Graph> {
    let name = name.to_ascii_lowercase().replace('-', "_");
    let arity = NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, a)| a)
        .ok_or_else(|| invalid(&name, "unknown graph name"))?;
    if params.len() != arity {
        return Err(invalid(
            &name,
            format!("expected {arity} parameter(s), got {}", params.len()),
        ));
    }
    match name.as_str() {
        "complete" => Ok(complete(params[0])),
        "complete_bipartite" => complete_bipartite(params[0], params[1]),
        "cycle" => cycle(params[0]),
        "path" => path(params[0]),
        "star" => star(params[0]),
        "necklace" => necklace(params[0], params[1]),
        "cycle_with_tail" => cycle_with_tail(params[0], params[1]),
        "net" => Ok(net()),
        "paw" => Ok(paw()),
        "chair" => Ok(chair()),
        "diamond" => Ok(diamond()),
        "complement_c7" => Ok(complement_c7()),
        "petersen" => Ok(petersen()),
        "empty" => Ok(Graph::empty(params[0])),
        _ => unreachable!("name listed in NAMES"),
    }
}

/// A short name for `g` when it is isomorphic to a familiar graph, such as
/// `K3`, `C6`, `P4`, `K1,3` or `net`; otherwise `"n vertices, m edges"`.
pub fn describe(g: &Graph) -> String {
    let (n, m) = (g.n(), g.m());
    if n == 0 {
        return "empty graph".into();
    }
    if m == n * (n - 1) / 2 {
        return format!("K{n}");
    }
    if m == 0 {
        return format!("{n} isolated vertices");
    }
    let same = |h: Graph| crate::graph::is_isomorphic(g, &h).unwrap_or(false);
    let connected = g.is_connected();
    let max = g.max_degree().unwrap_or(0);
    if connected && max == 2 {
        return if m == n {
            format!("C{n}")
        } else {
            format!("P{n}")
        };
    }
    if connected && m + 1 == n && max == m {
        return format!("K1,{m}");
    }
    let fixed = [
        ("net", net()),
        ("paw", paw()),
        ("chair", chair()),
        ("diamond", diamond()),
        ("complement of C7", complement_c7()),
        ("Petersen graph", petersen()),
    ];
    for (name, h) in fixed {
        if h.n() == n && h.m() == m && same(h) {
            return name.into();
        }
    }
    for p in 2..n.saturating_sub(1) {
        if p <= n - p && p * (n - p) == m && same(complete_bipartite(p, n - p).expect("p >= 1")) {
            return format!("K{},{}", p, n - p);
        }
    }
    format!("{n} vertices, {m} edges")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklace_sizes() {
        // C_n plus K_m plus two attachments per clique vertex.
        let g = necklace(5, 1).unwrap();
        assert_eq!((g.n(), g.m()), (6, 7));
        let g = necklace(6, 3).unwrap();
        assert_eq!((g.n(), g.m()), (9, 6 + 3 + 6));
        assert!(g.induces_cycle(&[0, 1, 2, 3, 4, 5]));
        assert!(necklace(2, 1).is_err());
        assert!(necklace(5, 0).is_err());
    }

    #[test]
    fn descriptions() {
        assert_eq!(describe(&complete(2)), "K2");
        assert_eq!(describe(&cycle(6).unwrap()), "C6");
        assert_eq!(describe(&path(4).unwrap()), "P4");
        assert_eq!(describe(&star(3).unwrap()), "K1,3");
        assert_eq!(describe(&complete_bipartite(2, 3).unwrap()), "K2,3");
        assert_eq!(describe(&net()), "net");
        assert_eq!(describe(&necklace(5, 1).unwrap()), "6 vertices, 7 edges");
    }

    #[test]
    fn net_shape() {
        let g = net();
        assert_eq!((g.n(), g.m()), (6, 6));
        let mut d = g.degrees();
        d.sort_unstable();
        assert_eq!(d, vec![1, 1, 1, 3, 3, 3]);
        assert!(g.induces_cycle(&[0, 1, 2]));
    }

    #[test]
    fn complement_c7_shape() {
        let g = complement_c7();
        assert_eq!(g.n(), 7);
        assert!(g.degrees().iter().all(|&d| d == 4));
        assert_eq!(g.girth(), Some(3));
    }

    #[test]
    fn tail_and_small_graphs() {
        let g = cycle_with_tail(5, 3).unwrap();
        assert_eq!((g.n(), g.m()), (8, 8));
        assert_eq!(g.degree(7).unwrap(), 1);
        assert_eq!(paw().m(), 4);
        assert_eq!((chair().n(), chair().m()), (5, 4));
        assert_eq!(diamond().m(), 5);
        assert_eq!(petersen().degrees(), vec![3; 10]);
    }

    #[test]
    fn by_name() {
        assert_eq!(
            build_named("necklace", &[5, 1]).unwrap(),
            necklace(5, 1).unwrap()
        );
        assert_eq!(build_named("Complement-C7", &[]).unwrap(), complement_c7());
        assert!(build_named("cycle", &[]).is_err());
        assert!(build_named("cycle", &[2]).is_err());
        assert!(build_named("nonsense", &[1]).is_err());
    }
}
