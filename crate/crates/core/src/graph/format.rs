//! Text formats: graph6, plain edge lists and DOT.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes `g` in graph6: the vertex count followed by the upper triangle of
/// the adjacency matrix, column by column, packed six bits per byte.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n) / 12);
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")))
    }
}

/// Parses one graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are ignored. Padding bits must be zero so that
/// every accepted string is the encoding of its own graph.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    let (n, header_len) = if bytes[0] != 126 {
        (sextet(bytes[0])? as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | sextet(b)? as usize;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | sextet(b)? as usize;
        }
        (n, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = sextet(body[k / 6])?;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 {
        let last = sextet(body[expected - 1])?;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    for &b in body {
        sextet(b)?;
    }
    Graph::from_edges(n, edges)
}

/// Parses the edge-list format: a header line `n <count>` followed by one
/// `u v` pair per line. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::EdgeList {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (n, fields.as_slice()) {
            (None, ["n", count]) => {
                n = Some(
                    count
                        .parse()
                        .map_err(|_| err(format!("bad count {count:?}")))?,
                );
            }
            (None, _) => return Err(err("expected header `n <count>`".into())),
            (Some(_), [u, v]) => {
                let u: usize = u.parse().map_err(|_| err(format!("bad vertex {u:?}")))?;
                let v: usize = v.parse().map_err(|_| err(format!("bad vertex {v:?}")))?;
                edges.push((u, v));
            }
            (Some(_), _) => return Err(err(format!("expected `u v`, found {line:?}"))),
        }
    }
    let n = n.ok_or(Error::EdgeList {
        line: 0,
        message: "missing header `n <count>`".into(),
    })?;
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

/// DOT export. `labels`, when given, must have one entry per vertex.
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => {
                let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
                let _ = writeln!(out, "  {v} [label=\"{escaped}\"];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn small_graph6_strings() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_list(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g), "D?{");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert_eq!(to_graph6(&named::complete(2)), "A_");
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap().m(), 1);
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?").is_err()); // truncated
        assert!(parse_graph6("D?{?").is_err()); // trailing byte
        assert!(parse_graph6("A`").is_err()); // padding bit set
        assert!(parse_graph6("~?").is_err());
        assert!(parse_graph6("D? {").is_err());
    }

    #[test]
    fn large_size_prefix() {
        let g = Graph::empty(63);
        let s = to_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap().n(), 63);
        let big = named::cycle(100).unwrap();
        assert_eq!(parse_graph6(&to_graph6(&big)).unwrap(), big);
    }

    #[test]
    fn edge_list_format() {
        let g = parse_edge_list("# paw\nn 4\n0 1\n0 2\n1 2\n2 3\n").unwrap();
        assert_eq!(g, named::paw());
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(parse_edge_list("0 1\n").is_err());
        assert!(parse_edge_list("n 2\n0 2\n").is_err());
        assert!(parse_edge_list("n 2\n0\n").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn dot_export() {
        let dot = to_dot(&named::path(2).unwrap(), Some(&["a\"b".into(), "c".into()]));
        assert!(dot.contains("0 [label=\"a\\\"b\"];"));
        assert!(dot.contains("0 -- 1;"));
    }
}
