use kbe_core::bicliques::{enumerate_bicliques_capped, enumerate_bicliques_oracle, ORACLE_LIMIT};
use kbe_core::connectivity::{
    disconnecting_set_oracle, edge_class_partition, edge_class_partition_per_component,
    kbe_components_oracle, EdgePartition,
};
use kbe_core::dynamics::{classify, trace_sizes, ClassifyOptions, DynamicsReport, Outcome};
use kbe_core::graph::{is_isomorphic, named, to_graph6};
use kbe_core::operators::{
    burgeon_graph, edge_biclique_graph_capped, iterate_kbe, kbe_from_bicliques, line_graph,
    recognize_burgeon, verify_burgeon_identity,
};
use kbe_core::structures::{find_necklace_certificate, is_induced_necklace, NecklaceSearch};
use kbe_core::{Budgets, Edge, Graph};
use serde::Serialize;

use crate::io::{json_line, render_graph, CliError, OutputFormat};

/// Settings shared by every per-graph command.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub budgets: Budgets,
    pub output: Option<OutputFormat>,
    pub verify: bool,
    pub per_component: bool,
    pub burgeon_fastpath: bool,
}

impl Ctx {
    fn graph_format(&self) -> OutputFormat {
        self.output.unwrap_or(OutputFormat::Graph6)
    }

    fn json(&self) -> bool {
        self.output == Some(OutputFormat::Json)
    }
}

fn verify_that(cond: bool, what: impl FnOnce() -> String) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(CliError::Verification(what()))
    }
}

fn iso(a: &Graph, b: &Graph) -> Result<bool, CliError> {
    let limit = a.n().max(b.n()).max(kbe_core::graph::DEFAULT_CANON_LIMIT);
    Ok(kbe_core::graph::is_isomorphic_bounded(a, b, limit)?)
}

pub fn bicliques(g: &Graph, ctx: &Ctx) -> Result<String, CliError> {
    let set = enumerate_bicliques_capped(g, ctx.budgets.max_bicliques)?;
    if ctx.verify && g.n() <= ORACLE_LIMIT {
        verify_that(set == enumerate_bicliques_oracle(g)?, || {
            "biclique enumeration differs from the subset oracle".into()
        })?;
    }
    if ctx.json() {
        return Ok(json_line(&set));
    }
    let mut out = String::new();
    for b in &set {
        out.push_str(&b.to_string());
        out.push('\n');
    }
    Ok(out)
}

/// Checks one application of `KB_e` against the subset oracle and a direct
/// pairwise edge comparison.
fn verify_kbe_step(g: &Graph, next: &Graph) -> Result<(), CliError> {
    if g.n() > ORACLE_LIMIT {
        return Ok(());
    }
    let set = enumerate_bicliques_oracle(g)?;
    let edges: Vec<Vec<Edge>> = set.iter().map(|b| b.edges()).collect();
    let k = edges.len();
    let mut pairs = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            if edges[a].iter().any(|e| edges[b].binary_search(e).is_ok()) {
                pairs.push((a, b));
            }
        }
    }
    let expected = Graph::from_edges(k, pairs)?;
    verify_that(expected == *next, || {
        "KB_e differs from the pairwise oracle".into()
    })?;
    verify_that(kbe_from_bicliques(g, set).graph == *next, || {
        "KB_e construction mismatch".into()
    })
}

pub fn kbe(g: &Graph, steps: usize, ctx: &Ctx) -> Result<String, CliError> {
    if steps == 0 {
        return Ok(render_graph(g, None, ctx.graph_format()));
    }
    let before = iterate_kbe(g, steps - 1, &ctx.budgets)?;
    let last = edge_biclique_graph_capped(&before, ctx.budgets.max_bicliques)?;
    if last.graph.n() > ctx.budgets.max_vertices {
        return Err(kbe_core::Error::BudgetExceeded {
            step: steps,
            reason: format!(
                "iterate has more than {} vertices",
                ctx.budgets.max_vertices
            ),
        }
        .into());
    }
    if ctx.verify {
        let mut cur = g.clone();
        for _ in 0..steps {
            let next = kbe_core::operators::edge_biclique_graph(&cur)?.graph;
            verify_kbe_step(&cur, &next)?;
            cur = next;
        }
        verify_that(cur == last.graph, || "iterates disagree".into())?;
    }
    let labels = last.label_strings();
    Ok(render_graph(&last.graph, Some(&labels), ctx.graph_format()))
}

#[derive(Serialize)]
struct PartitionJson<'a> {
    k: usize,
    connected: bool,
    classes: Vec<Vec<Edge>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    disconnecting_set: Option<&'a [usize]>,
}

pub fn partition(g: &Graph, ctx: &Ctx) -> Result<String, CliError> {
    let part: EdgePartition = if ctx.per_component {
        edge_class_partition_per_component(g)?
    } else {
        edge_class_partition(g).map_err(|e| match e {
            kbe_core::Error::Disconnected => {
                CliError::Refused("graph is not connected (use --per-component)".into())
            }
            other => other.into(),
        })?
    };
    let mut witness = None;
    if ctx.verify {
        verify_that(part == kbe_components_oracle(g)?, || {
            "partition differs from the components of KB_e(G)".into()
        })?;
        if g.n() <= ORACLE_LIMIT && g.is_connected() && g.m() > 0 {
            witness = disconnecting_set_oracle(g)?;
            verify_that((part.k == 1) == witness.is_none(), || {
                "partition disagrees with the disconnecting-set oracle".into()
            })?;
        }
    }
    if ctx.json() {
        return Ok(json_line(&PartitionJson {
            k: part.k,
            connected: part.is_connected(),
            classes: part.classes(),
            disconnecting_set: witness.as_ref().map(|w| w.vertices()),
        }));
    }
    let mut out = part.to_string();
    if ctx.verify {
        out.push_str("verified: matches KB_e components");
        if let Some(w) = witness {
            let s: Vec<String> = w.vertices().iter().map(usize::to_string).collect();
            out.push_str(&format!("; disconnecting set {{{}}}", s.join(",")));
        }
        out.push('\n');
    }
    Ok(out)
}

#[derive(Serialize)]
struct ClassifyLine<'a> {
    graph6: String,
    #[serde(flatten)]
    report: &'a DynamicsReport,
}

pub fn classify_one(g: &Graph, ctx: &Ctx) -> Result<String, CliError> {
    let options = ClassifyOptions {
        budgets: ctx.budgets,
        burgeon_fastpath: ctx.burgeon_fastpath,
        necklace: NecklaceSearch::default(),
    };
    let report = classify(g, &options)?;
    if ctx.verify {
        match &report.outcome {
            Outcome::DivergentCertified { certificate, .. } => {
                verify_that(certificate.is_valid(), || {
                    "certificate does not re-validate".into()
                })?
            }
            Outcome::ConvergedFixed { limit, .. } => {
                let next = kbe_core::operators::edge_biclique_graph(limit)?.graph;
                verify_that(iso(&next, limit)?, || "limit is not a fixed point".into())?
            }
            _ => {}
        }
    }
    Ok(json_line(&ClassifyLine {
        graph6: to_graph6(g),
        report: &report,
    }))
}

pub fn trace(g: &Graph, steps: usize, ctx: &Ctx) -> Result<String, CliError> {
    let t = trace_sizes(g, steps, &ctx.budgets)?;
    if ctx.json() {
        return Ok(json_line(&t));
    }
    let mut out = String::from("step vertices edges bicliques\n");
    for s in t {
        let b = s.bicliques.map_or("-".to_string(), |b| b.to_string());
        out.push_str(&format!("{} {} {} {}\n", s.step, s.vertices, s.edges, b));
    }
    Ok(out)
}

pub fn linegraph(g: &Graph, ctx: &Ctx) -> Result<String, CliError> {
    let l = line_graph(g);
    if ctx.verify {
        let k = l.labels.len();
        let ok = (0..k).all(|a| {
            (a + 1..k).all(|b| l.graph.has_edge(a, b) == l.labels[a].shares_endpoint(&l.labels[b]))
        });
        verify_that(ok, || "line graph adjacency mismatch".into())?;
    }
    Ok(render_graph(
        &l.graph,
        Some(&l.label_strings()),
        ctx.graph_format(),
    ))
}

pub fn burgeon(g: &Graph, recognize: bool, ctx: &Ctx) -> Result<String, CliError> {
    if recognize {
        let witness =
            recognize_burgeon(g).ok_or_else(|| CliError::Refused("not a burgeon graph".into()))?;
        if ctx.verify {
            verify_that(witness.verify(g), || "witness does not replay".into())?;
        }
        if ctx.json() {
            return Ok(json_line(&witness));
        }
        return Ok(render_graph(&witness.host, None, ctx.graph_format()));
    }
    let b = burgeon_graph(g)?;
    if ctx.verify {
        let back = recognize_burgeon(&b.graph)
            .ok_or_else(|| CliError::Verification("B(G) not recognized".into()))?;
        verify_that(is_isomorphic(&back.host, g)?, || {
            "recognized host differs from G".into()
        })?;
    }
    Ok(render_graph(
        &b.graph,
        Some(&b.label_strings()),
        ctx.graph_format(),
    ))
}

#[derive(Serialize)]
struct IdentityJson {
    holds: bool,
    kbe_of_burgeon: String,
    burgeon_of_line: String,
}

pub fn verify_identity(g: &Graph, ctx: &Ctx) -> Result<String, CliError> {
    let check = verify_burgeon_identity(g)?;
    if ctx.verify && check.kbe_of_burgeon.n() <= ORACLE_LIMIT {
        let b = burgeon_graph(g)?.graph;
        let k = kbe_core::operators::edge_biclique_graph(&b)?.graph;
        verify_kbe_step(&b, &k)?;
    }
    let lhs = named::describe(&check.kbe_of_burgeon);
    let rhs = named::describe(&check.burgeon_of_line);
    if ctx.json() {
        let doc = IdentityJson {
            holds: check.holds,
            kbe_of_burgeon: lhs,
            burgeon_of_line: rhs,
        };
        return if check.holds {
            Ok(json_line(&doc))
        } else {
            Err(CliError::Refused(json_line(&doc).trim_end().to_string()))
        };
    }
    if check.holds {
        Ok(format!("OK: both sides isomorphic ({lhs})\n"))
    } else {
        Err(CliError::Refused(format!(
            "MISMATCH: KB_e(B(G)) is {lhs}, B(L(G)) is {rhs}"
        )))
    }
}

pub fn find_necklace(g: &Graph, search: &NecklaceSearch, ctx: &Ctx) -> Result<String, CliError> {
    let found = find_necklace_certificate(g, search)?;
    if ctx.verify {
        if let Some(c) = &found.certificate {
            verify_that(is_induced_necklace(g, c), || {
                "certificate does not re-validate".into()
            })?;
        }
    }
    if ctx.json() {
        return Ok(json_line(&found));
    }
    Ok(match &found.certificate {
        Some(c) => format!("{c}\nexhaustive: {}\n", found.exhaustive),
        None => format!("none found\nexhaustive: {}\n", found.exhaustive),
    })
}

#[derive(Serialize)]
struct FixedPointJson {
    graph6: String,
    n: usize,
    m: usize,
    girth: Option<usize>,
    min_degree: Option<usize>,
}

/// Empty output unless `KB_e(G)` is isomorphic to `G`.
pub fn fixed_point(g: &Graph, ctx: &Ctx) -> Result<String, CliError> {
    let next = edge_biclique_graph_capped(g, ctx.budgets.max_bicliques)?.graph;
    if next.n() != g.n() || next.m() != g.m() || !iso(&next, g)? {
        return Ok(String::new());
    }
    if ctx.verify && g.n() <= ORACLE_LIMIT {
        verify_kbe_step(g, &next)?;
    }
    Ok(json_line(&FixedPointJson {
        graph6: to_graph6(g),
        n: g.n(),
        m: g.m(),
        girth: g.girth(),
        min_degree: g.min_degree(),
    }))
}
