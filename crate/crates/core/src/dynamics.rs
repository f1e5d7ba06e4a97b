//! Behaviour of `G` under iterated `KB_e`: convergence to the empty graph or
//! to a fixed point, periodicity, certified divergence, or an honest "ran out
//! of budget".

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bicliques::enumerate_bicliques_capped;
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::graph::{canonical_form_bounded, CanonicalForm, Graph, DEFAULT_CANON_LIMIT};
use crate::operators::{kbe_step, recognize_burgeon, BurgeonWitness};
use crate::structures::{
    find_necklace_certificate, is_induced_necklace, NecklaceCertificate, NecklaceSearch,
};

/// Why a graph is known to diverge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// An induced necklace with good neighbours in `graph`, the iterate at
    /// the reported step.
    Necklace {
        graph: Graph,
        necklace: NecklaceCertificate,
    },
    /// `graph = B(host)` with a host that is not a cycle, a path or `K_{1,3}`.
    Burgeon {
        graph: Graph,
        witness: BurgeonWitness,
    },
}

impl Certificate {
    /// Checks the certificate from scratch.
    pub fn is_valid(&self) -> bool {
        match self {
            Certificate::Necklace { graph, necklace } => is_induced_necklace(graph, necklace),
            Certificate::Burgeon { graph, witness } => {
                witness.verify(graph)
                    && witness.host.is_connected()
                    && !witness.host_is_cycle_path_or_claw()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    /// `KB_e^steps(G)` is the first empty iterate.
    ConvergedEmpty { steps: usize },
    /// `KB_e^steps(G) = limit` is the first iterate with `KB_e(limit) = limit`.
    ConvergedFixed { steps: usize, limit: Graph },
    /// `KB_e^{entry_step}(G) = KB_e^{entry_step + period}(G)`, `period >= 2`.
    Periodic { entry_step: usize, period: usize },
    DivergentCertified {
        step: usize,
        certificate: Certificate,
    },
    BudgetExhausted {
        last_step: usize,
        last_size: usize,
        reason: String,
    },
}

impl Outcome {
    pub fn name(&self) -> &'static str {
        match self {
            Outcome::ConvergedEmpty { .. } => "converged_empty",
            Outcome::ConvergedFixed { .. } => "converged_fixed",
            Outcome::Periodic { .. } => "periodic",
            Outcome::DivergentCertified { .. } => "divergent_certified",
            Outcome::BudgetExhausted { .. } => "budget_exhausted",
        }
    }
}

/// Sizes of one iterate. `bicliques` is the vertex count of the next iterate
/// when it was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub step: usize,
    pub vertices: usize,
    pub edges: usize,
    pub bicliques: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynamicsReport {
    #[serde(flatten)]
    pub outcome: Outcome,
    pub trace: Vec<TraceStep>,
    pub budgets: Budgets,
}

impl DynamicsReport {
    /// Vertex counts per step.
    pub fn sizes(&self) -> Vec<usize> {
        self.trace.iter().map(|t| t.vertices).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct ClassifyOptions {
    pub budgets: Budgets,
    /// Decide burgeon inputs from their host at step 0 instead of iterating.
    pub burgeon_fastpath: bool,
    pub necklace: NecklaceSearch,
}

impl ClassifyOptions {
    pub fn with_budgets(budgets: Budgets) -> Self {
        ClassifyOptions {
            budgets,
            ..ClassifyOptions::default()
        }
    }
}

/// Cheap isomorphism invariant used to avoid most canonical-form work.
type Invariant = (usize, usize, Vec<usize>);

struct Memo {
    limit: usize,
    seen: HashMap<Invariant, Vec<Seen>>,
}

/// An earlier iterate; its canonical form is computed on first demand.
struct Seen {
    step: usize,
    graph: Graph,
    form: Option<CanonicalForm>,
}

impl Memo {
    /// Records iterate `step` and returns the earliest step with an
    /// isomorphic iterate, if any.
    fn insert(&mut self, step: usize, g: &Graph) -> Result<Option<usize>> {
        let key = (g.n(), g.m(), g.degree_sequence());
        let bucket = self.seen.entry(key).or_default();
        let mut hit = None;
        let mut form = None;
        if !bucket.is_empty() {
            let cf = canonical_form_bounded(g, self.limit)?;
            for seen in bucket.iter_mut() {
                if seen.form.is_none() {
                    seen.form = Some(canonical_form_bounded(&seen.graph, self.limit)?);
                }
                if seen.form.as_ref() == Some(&cf) {
                    hit = Some(seen.step);
                    break;
                }
            }
            form = Some(cf);
        }
        bucket.push(Seen {
            step,
            graph: g.clone(),
            form,
        });
        Ok(hit)
    }
}

/// Iterates `KB_e` from `g` and classifies the behaviour. Every failure mode
/// is an outcome; the function only errors on invalid options.
pub fn classify(g: &Graph, options: &ClassifyOptions) -> Result<DynamicsReport> {
    let budgets = options.budgets;
    budgets.validate()?;
    let mut memo = Memo {
        limit: budgets.max_vertices.max(DEFAULT_CANON_LIMIT).max(g.n()),
        seen: HashMap::new(),
    };
    let mut trace: Vec<TraceStep> = Vec::new();
    let mut current = g.clone();
    let mut step = 0;
    let outcome = loop {
        trace.push(TraceStep {
            step,
            vertices: current.n(),
            edges: current.m(),
            bicliques: None,
        });
        if current.is_empty() {
            break Outcome::ConvergedEmpty { steps: step };
        }
        if current.m() == 0 {
            // No bicliques: the next iterate is empty.
            trace[step].bicliques = Some(0);
            trace.push(TraceStep {
                step: step + 1,
                vertices: 0,
                edges: 0,
                bicliques: None,
            });
            break Outcome::ConvergedEmpty { steps: step + 1 };
        }
        match memo.insert(step, &current)? {
            Some(prev) if prev + 1 == step => {
                break Outcome::ConvergedFixed {
                    steps: prev,
                    limit: current,
                }
            }
            Some(prev) => {
                break Outcome::Periodic {
                    entry_step: prev,
                    period: step - prev,
                }
            }
            None => {}
        }
        let found = find_necklace_certificate(&current, &options.necklace)?;
        if let Some(necklace) = found.certificate {
            break Outcome::DivergentCertified {
                step,
                certificate: Certificate::Necklace {
                    graph: current,
                    necklace,
                },
            };
        }
        if step == 0 && options.burgeon_fastpath {
            if let Some(outcome) = burgeon_shortcut(&current) {
                break outcome;
            }
        }
        if step == budgets.max_steps {
            break Outcome::BudgetExhausted {
                last_step: step,
                last_size: current.n(),
                reason: format!("reached {} steps", budgets.max_steps),
            };
        }
        match kbe_step(&current, &budgets) {
            Ok(next) => {
                trace[step].bicliques = Some(next.n());
                current = next;
                step += 1;
            }
            Err(reason) => {
                break Outcome::BudgetExhausted {
                    last_step: step,
                    last_size: current.n(),
                    reason,
                }
            }
        }
    };
    Ok(DynamicsReport {
        outcome,
        trace,
        budgets,
    })
}

/// Known behaviour of a connected burgeon graph, read off its host.
fn burgeon_shortcut(g: &Graph) -> Option<Outcome> {
    if !g.is_connected() {
        return None;
    }
    let witness = recognize_burgeon(g)?;
    let host = &witness.host;
    if !witness.host_is_cycle_path_or_claw() {
        return Some(Outcome::DivergentCertified {
            step: 0,
            certificate: Certificate::Burgeon {
                graph: g.clone(),
                witness,
            },
        });
    }
    let n = host.n();
    if n >= 3 && host.m() == n {
        // B(C_k) = C_{2k}, a fixed point.
        return Some(Outcome::ConvergedFixed {
            steps: 0,
            limit: g.clone(),
        });
    }
    if host.m() + 1 == n && host.max_degree() <= Some(2) {
        // B(P_k) = P_{2k-2}; KB_e(P_j) = P_{j-2}, and P_2 -> K_1 -> empty.
        let j = g.n();
        return Some(Outcome::ConvergedEmpty {
            steps: (j - 2) / 2 + 2,
        });
    }
    // B(K_{1,3}) is the net; KB_e(net) = B(K_3) = C_6.
    Some(Outcome::ConvergedFixed {
        steps: 1,
        limit: crate::graph::named::cycle(6).expect("n >= 3"),
    })
}

/// Vertex and biclique counts of the iterates, stopping at the empty graph,
/// after `max_steps` steps, or when a budget trips.
pub fn trace_sizes(g: &Graph, max_steps: usize, budgets: &Budgets) -> Result<Vec<TraceStep>> {
    budgets.validate()?;
    let mut out = Vec::new();
    let mut current = g.clone();
    for step in 0..=max_steps {
        let mut entry = TraceStep {
            step,
            vertices: current.n(),
            edges: current.m(),
            bicliques: None,
        };
        if current.is_empty() {
            entry.bicliques = Some(0);
            out.push(entry);
            break;
        }
        if step == max_steps {
            entry.bicliques = enumerate_bicliques_capped(&current, budgets.enumeration_cap())
                .ok()
                .map(|s| s.len());
            out.push(entry);
            break;
        }
        match kbe_step(&current, budgets) {
            Ok(next) => {
                entry.bicliques = Some(next.n());
                out.push(entry);
                current = next;
            }
            Err(_) => {
                out.push(entry);
                break;
            }
        }
    }
    Ok(out)
}

/// The limit of `KB_e^k(G)` for girth at least five: repeatedly delete
/// vertices of degree at most one, leaving the cycles and the paths joining
/// them. Vertices keep their relative order.
pub fn girth_convergence_limit(g: &Graph) -> Result<Graph> {
    if let Some(girth) = g.girth() {
        if girth < 5 {
            return Err(Error::GirthBelowFive(girth));
        }
    }
    let mut alive = vec![true; g.n()];
    let mut deg = g.degrees();
    let mut stack: Vec<usize> = g.vertices().filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &u in g.nbrs(v) {
            if alive[u] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }
    let keep: Vec<usize> = g.vertices().filter(|&v| alive[v]).collect();
    Ok(g.induced_subgraph(&keep)?.0)
}
