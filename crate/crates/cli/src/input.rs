//! Reading graphs from files or stdin, in graph6 or edge-list format.

use std::io::Read;

use forcelab_core::graph::{edgelist, graph6};
use forcelab_core::Graph;

use crate::{CliError, FormatArg};

/// One successfully parsed input graph.
pub struct InputGraph {
    /// The graph6 encoding for graph6 inputs, the input path otherwise.
    pub id: String,
    /// 1-based line of the input the graph started on.
    pub line: usize,
    pub graph: Graph,
}

/// One input line (or file) that failed to parse.
pub struct ParseFailure {
    pub id: String,
    pub line: usize,
    pub error: String,
}

fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::input(format!("failed to read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("failed to read {path}: {e}")))
    }
}

/// Reads every graph from `path` ("-" for stdin). Parse failures are
/// collected per line and do not abort the rest of the input; only IO
/// failures are fatal.
pub fn read_graphs(
    path: &str,
    format: FormatArg,
) -> Result<(Vec<InputGraph>, Vec<ParseFailure>), CliError> {
    let text = read_source(path)?;
    let format = match format {
        FormatArg::Auto => sniff(&text),
        explicit => explicit,
    };
    match format {
        FormatArg::Edgelist => Ok(parse_edgelist(path, &text)),
        _ => Ok(parse_graph6_lines(&text)),
    }
}

/// An edge list opens with its "n m" header, so a leading ASCII digit
/// separates the two formats: digits are not valid graph6 header bytes.
fn sniff(text: &str) -> FormatArg {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(line) if line.starts_with(|c: char| c.is_ascii_digit()) => FormatArg::Edgelist,
        _ => FormatArg::Graph6,
    }
}

fn parse_graph6_lines(text: &str) -> (Vec<InputGraph>, Vec<ParseFailure>) {
    let mut graphs = Vec::new();
    let mut failures = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        // Skip blank lines and a standalone format header.
        if trimmed.is_empty() || trimmed == ">>graph6<<" {
            continue;
        }
        match graph6::parse(trimmed) {
            Ok(graph) => graphs.push(InputGraph {
                id: trimmed.to_string(),
                line,
                graph,
            }),
            Err(e) => failures.push(ParseFailure {
                id: trimmed.to_string(),
                line,
                error: e.to_string(),
            }),
        }
    }
    (graphs, failures)
}

fn parse_edgelist(path: &str, text: &str) -> (Vec<InputGraph>, Vec<ParseFailure>) {
    let id = if path == "-" { "stdin" } else { path };
    match edgelist::parse(text) {
        Ok(graph) => (
            vec![InputGraph {
                id: id.to_string(),
                line: 1,
                graph,
            }],
            Vec::new(),
        ),
        Err(e) => (
            Vec::new(),
            vec![ParseFailure {
                id: id.to_string(),
                line: 1,
                error: e.to_string(),
            }],
        ),
    }
}
