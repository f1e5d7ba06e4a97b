mod commands;
mod io;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kbe_core::graph::named;
use kbe_core::structures::{CycleLimits, NecklaceSearch};
use kbe_core::{Budgets, Graph};
use rayon::prelude::*;

use crate::commands::Ctx;
use crate::io::{render_graph, CliError, InputFormat, OutputFormat, Record};

/// Edge-biclique graphs: iterate KB_e, partition edges, classify dynamics.
#[derive(Parser)]
#[command(name = "kbe", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    #[arg(long, global = true, value_enum, default_value = "graph6")]
    input_format: InputFormat,
    /// Defaults to graph6 for graphs; some commands also accept json.
    #[arg(long, global = true, value_enum)]
    output_format: Option<OutputFormat>,
    #[arg(long, global = true, env = "KBE_MAX_STEPS", default_value_t = Budgets::default().max_steps)]
    max_steps: usize,
    #[arg(long, global = true, env = "KBE_MAX_VERTICES", default_value_t = Budgets::default().max_vertices)]
    max_vertices: usize,
    #[arg(long, global = true, env = "KBE_MAX_BICLIQUES", default_value_t = Budgets::default().max_bicliques)]
    max_bicliques: usize,
    /// Threads used for batch input.
    #[arg(long, global = true, env = "KBE_WORKERS", default_value_t = 1,
          value_parser = clap::value_parser!(u16).range(1..))]
    workers: u16,
    /// Cross-check results against brute-force oracles (graphs up to 16 vertices).
    #[arg(long, global = true)]
    verify: bool,
    /// Partition each connected component separately.
    #[arg(long, global = true)]
    per_component: bool,
    /// Classify burgeon graphs from their host without iterating.
    #[arg(long, global = true)]
    burgeon_fastpath: bool,
}

#[derive(Args)]
struct Input {
    /// Input file; stdin when absent or "-".
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the maximal bicliques.
    Bicliques(Input),
    /// Apply KB_e a number of times.
    Kbe {
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Partition the edges by the components of KB_e.
    Partition(Input),
    /// Classify the KB_e dynamics; one JSON line per graph.
    Classify(Input),
    /// Vertex, edge and biclique counts along the iteration.
    Trace {
        #[arg(long)]
        steps: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// The line graph.
    Linegraph(Input),
    /// The burgeon graph, or with --recognize its host.
    Burgeon {
        #[arg(long)]
        recognize: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Check KB_e(B(G)) against B(L(G)).
    VerifyIdentity(Input),
    /// Search for an induced necklace.
    FindNecklace {
        #[arg(long, default_value_t = 5)]
        min_cycle: usize,
        #[arg(long, default_value_t = 12)]
        max_cycle: usize,
        #[arg(long, default_value_t = 1)]
        min_pendants: usize,
        /// Maximum number of induced cycles examined.
        #[arg(long, default_value_t = CycleLimits::default().max_cycles)]
        cycle_budget: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Print the (n,m)-necklace.
    Necklace {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Print a named graph, e.g. `named cycle 6`.
    Named {
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        params: Vec<usize>,
        #[arg(long)]
        list: bool,
    },
    /// Keep the graphs with KB_e(G) isomorphic to G.
    FixedPoints(Input),
}

const CHUNK: usize = 256;

/// Runs `f` over every input graph, `workers` at a time, writing results in
/// input order. Failures are reported per graph and do not stop the batch;
/// the returned code is that of the first failure.
fn run_batch<F>(input: &Input, g: &Global, f: F) -> Result<u8, CliError>
where
    F: Fn(&Graph) -> Result<String, CliError> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(usize::from(g.workers))
        .build()
        .expect("thread pool");
    let mut records = io::records(input.file.as_deref(), g.input_format)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut code = 0u8;
    loop {
        let chunk: Vec<Record> = records.by_ref().take(CHUNK).collect::<Result<_, _>>()?;
        if chunk.is_empty() {
            break;
        }
        let results: Vec<Result<String, CliError>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|r| r.parse(g.input_format).and_then(|graph| f(&graph)))
                .collect()
        });
        for (r, res) in chunk.iter().zip(results) {
            match res {
                Ok(text) => out.write_all(text.as_bytes())?,
                Err(e) => {
                    out.flush()?;
                    match &e {
                        CliError::Parse { .. } => eprintln!("kbe: {e}"),
                        _ => eprintln!("kbe: input {}: {e}", r.index),
                    }
                    if code == 0 {
                        code = e.exit_code();
                    }
                }
            }
        }
    }
    out.flush()?;
    Ok(code)
}

fn usage(e: kbe_core::Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn print(text: &str) -> Result<u8, CliError> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let g = &cli.global;
    let budgets = Budgets {
        max_steps: g.max_steps,
        max_vertices: g.max_vertices,
        max_bicliques: g.max_bicliques,
    };
    budgets.validate()?;
    let ctx = Ctx {
        budgets,
        output: g.output_format,
        verify: g.verify,
        per_component: g.per_component,
        burgeon_fastpath: g.burgeon_fastpath,
    };
    let fmt = g.output_format.unwrap_or(OutputFormat::Graph6);
    match &cli.command {
        Command::Bicliques(input) => run_batch(input, g, |x| commands::bicliques(x, &ctx)),
        Command::Kbe { steps, input } => run_batch(input, g, |x| commands::kbe(x, *steps, &ctx)),
        Command::Partition(input) => run_batch(input, g, |x| commands::partition(x, &ctx)),
        Command::Classify(input) => run_batch(input, g, |x| commands::classify_one(x, &ctx)),
        Command::Trace { steps, input } => {
            let steps = steps.unwrap_or(budgets.max_steps);
            run_batch(input, g, |x| commands::trace(x, steps, &ctx))
        }
        Command::Linegraph(input) => run_batch(input, g, |x| commands::linegraph(x, &ctx)),
        Command::Burgeon { recognize, input } => {
            run_batch(input, g, |x| commands::burgeon(x, *recognize, &ctx))
        }
        Command::VerifyIdentity(input) => {
            run_batch(input, g, |x| commands::verify_identity(x, &ctx))
        }
        Command::FindNecklace {
            min_cycle,
            max_cycle,
            min_pendants,
            cycle_budget,
            input,
        } => {
            let search = NecklaceSearch {
                min_cycle_len: *min_cycle,
                max_cycle_len: *max_cycle,
                limits: CycleLimits {
                    max_cycles: *cycle_budget,
                    ..CycleLimits::default()
                },
                min_pendants: *min_pendants,
            };
            run_batch(input, g, |x| commands::find_necklace(x, &search, &ctx))
        }
        Command::Necklace { n, m } => print(&render_graph(
            &named::necklace(*n, *m).map_err(usage)?,
            None,
            fmt,
        )),
        Command::Named { name, params, list } => {
            if *list {
                let mut text = String::new();
                for (name, arity) in named::NAMES {
                    text.push_str(&format!("{name} ({arity} parameter(s))\n"));
                }
                return print(&text);
            }
            let name = name.as_deref().expect("required unless --list");
            print(&render_graph(
                &named::build_named(name, params).map_err(usage)?,
                None,
                fmt,
            ))
        }
        Command::FixedPoints(input) => run_batch(input, g, |x| commands::fixed_point(x, &ctx)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("kbe: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
