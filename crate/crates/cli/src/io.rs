use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::Path;

use clap::ValueEnum;
use kbe_core::graph::{parse_edge_list, parse_graph6, to_dot, to_graph6};
use kbe_core::Graph;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Graph6,
    Dot,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("input {record}: {source}")]
    Parse {
        record: usize,
        source: kbe_core::Error,
    },
    #[error("{0}")]
    Core(#[from] kbe_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Refused(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// 2 for unreadable or malformed input, 1 for everything the library
    /// declines to do.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::Core(kbe_core::Error::Graph6(_) | kbe_core::Error::EdgeList { .. }) => 2,
            _ => 1,
        }
    }
}

/// One raw graph description; `index` counts from 1.
pub struct Record {
    pub index: usize,
    pub text: String,
}

impl Record {
    pub fn parse(&self, format: InputFormat) -> Result<Graph, CliError> {
        let parsed = match format {
            InputFormat::Graph6 => parse_graph6(&self.text),
            InputFormat::EdgeList => parse_edge_list(&self.text),
        };
        parsed.map_err(|source| CliError::Parse {
            record: self.index,
            source,
        })
    }
}

/// Graph6 input is one graph per nonempty line and is read lazily; an edge
/// list is a single graph.
pub fn records(
    path: Option<&Path>,
    format: InputFormat,
) -> Result<Box<dyn Iterator<Item = io::Result<Record>>>, CliError> {
    let reader: Box<dyn BufRead> = match path {
        Some(p) if p.as_os_str() != "-" => Box::new(BufReader::new(File::open(p)?)),
        _ => Box::new(BufReader::new(io::stdin())),
    };
    match format {
        InputFormat::Graph6 => {
            let lines = reader
                .lines()
                .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
                .enumerate()
                .map(|(i, l)| {
                    l.map(|text| Record {
                        index: i + 1,
                        text: text.trim().to_string(),
                    })
                });
            Ok(Box::new(lines))
        }
        InputFormat::EdgeList => {
            let mut text = String::new();
            let mut reader = reader;
            reader.read_to_string(&mut text)?;
            Ok(Box::new(std::iter::once(Ok(Record { index: 1, text }))))
        }
    }
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<&'a [String]>,
}

/// Renders a graph; `labels` name the vertices in DOT and JSON output.
pub fn render_graph(g: &Graph, labels: Option<&[String]>, format: OutputFormat) -> String {
    match format {
        OutputFormat::Graph6 => format!("{}\n", to_graph6(g)),
        OutputFormat::Dot => to_dot(g, labels),
        OutputFormat::Json => {
            let doc = JsonGraph {
                n: g.n(),
                edges: g.edge_list(),
                labels,
            };
            format!("{}\n", serde_json::to_string(&doc).expect("serializable"))
        }
    }
}

pub fn json_line<T: Serialize>(value: &T) -> String {
    format!("{}\n", serde_json::to_string(value).expect("serializable"))
}
