//! Browser bindings. Every export takes and returns plain strings; graphs
//! travel as graph6 on the way in and as JSON on the way out.

use kbe_core::connectivity::edge_class_partition_per_component;
use kbe_core::dynamics::{classify, ClassifyOptions};
use kbe_core::graph::{named, parse_graph6, to_graph6};
use kbe_core::operators::edge_biclique_graph_capped;
use kbe_core::{Budgets, Edge, Graph};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Demo graphs stay small so the page never stalls.
const MAX_INPUT: usize = 60;
const MAX_BICLIQUES: usize = 400;

#[derive(Serialize)]
struct GraphJson {
    graph6: String,
    name: String,
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl GraphJson {
    fn new(g: &Graph, labels: Option<Vec<String>>) -> Self {
        GraphJson {
            graph6: to_graph6(g),
            name: named::describe(g),
            n: g.n(),
            edges: g.edge_list(),
            labels,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn input(graph6: &str) -> Result<Graph, String> {
    let g = parse_graph6(graph6.trim()).map_err(|e| e.to_string())?;
    if g.n() > MAX_INPUT {
        return Err(format!("the demo accepts at most {MAX_INPUT} vertices"));
    }
    Ok(g)
}

/// `params` is a whitespace-separated list of integers.
pub fn named_graph_json(name: &str, params: &str) -> Result<String, String> {
    let params = params
        .split_whitespace()
        .map(|p| p.parse().map_err(|_| format!("bad parameter {p:?}")))
        .collect::<Result<Vec<usize>, _>>()?;
    let g = named::build_named(name, &params).map_err(|e| e.to_string())?;
    if g.n() > MAX_INPUT {
        return Err(format!("the demo accepts at most {MAX_INPUT} vertices"));
    }
    Ok(to_json(&GraphJson::new(&g, None)))
}

pub fn graph6_json(graph6: &str) -> Result<String, String> {
    Ok(to_json(&GraphJson::new(&input(graph6)?, None)))
}

/// One application of KB_e; vertex labels are the bicliques.
pub fn kbe_step_json(graph6: &str) -> Result<String, String> {
    let g = input(graph6)?;
    let next = edge_biclique_graph_capped(&g, MAX_BICLIQUES).map_err(|e| e.to_string())?;
    let labels = next.label_strings();
    Ok(to_json(&GraphJson::new(&next.graph, Some(labels))))
}

#[derive(Serialize)]
struct PartitionJson {
    k: usize,
    /// `class[i]` is the class (from 1) of the `i`-th edge in sorted order.
    class: Vec<usize>,
    edges: Vec<Edge>,
}

/// Edge classes of each component, for colouring.
pub fn edge_partition_json(graph6: &str) -> Result<String, String> {
    let g = input(graph6)?;
    let p = edge_class_partition_per_component(&g).map_err(|e| e.to_string())?;
    Ok(to_json(&PartitionJson {
        k: p.k,
        class: p.class_of,
        edges: p.edges,
    }))
}

pub fn classify_json(graph6: &str, max_steps: usize) -> Result<String, String> {
    let g = input(graph6)?;
    let budgets = Budgets {
        max_steps: max_steps.min(30),
        max_vertices: 600,
        max_bicliques: 20_000,
    };
    let report =
        classify(&g, &ClassifyOptions::with_budgets(budgets)).map_err(|e| e.to_string())?;
    Ok(to_json(&report))
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn named_graph(name: &str, params: &str) -> Result<String, JsError> {
    js(named_graph_json(name, params))
}

#[wasm_bindgen]
pub fn load_graph6(graph6: &str) -> Result<String, JsError> {
    js(graph6_json(graph6))
}

#[wasm_bindgen]
pub fn kbe_step(graph6: &str) -> Result<String, JsError> {
    js(kbe_step_json(graph6))
}

#[wasm_bindgen]
pub fn edge_partition(graph6: &str) -> Result<String, JsError> {
    js(edge_partition_json(graph6))
}

#[wasm_bindgen]
pub fn classify_dynamics(graph6: &str, max_steps: usize) -> Result<String, JsError> {
    js(classify_json(graph6, max_steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn named_then_step() {
        let k4 = parse(&named_graph_json("complete", "4").unwrap());
        assert_eq!(k4["name"], "K4");
        let g6 = k4["graph6"].as_str().unwrap();
        assert_eq!(parse(&graph6_json(g6).unwrap())["n"], 4);
        let next = parse(&kbe_step_json(g6).unwrap());
        assert_eq!(next["n"], 6);
        assert_eq!(next["labels"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn partition_and_classify() {
        let c5 = parse(&named_graph_json("cycle", "5").unwrap());
        let g6 = c5["graph6"].as_str().unwrap();
        assert_eq!(parse(&edge_partition_json(g6).unwrap())["k"], 1);
        assert_eq!(
            parse(&classify_json(g6, 10).unwrap())["outcome"],
            "converged_fixed"
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(named_graph_json("cycle", "x").is_err());
        assert!(kbe_step_json("not graph6!").is_err());
        assert!(named_graph_json("complete", "100").is_err());
    }
}
