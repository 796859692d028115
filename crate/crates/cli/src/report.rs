//! The JSON report envelope and shared value rendering.

use forcelab_core::{Graph, Rational, Steps, VertexSet};
use serde::Serialize;

use crate::CliError;

/// Version stamp on every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

/// The envelope every JSON-emitting command prints: a schema version, the
/// command name, one record per input graph (input order), and one entry
/// per failed input.
#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report<R: Serialize> {
    pub schema_version: u32,
    pub command: &'static str,
    pub records: Vec<R>,
    pub errors: Vec<ErrorRecord>,
}

/// A per-input failure: the input kept going, this line produced no record.
#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ErrorRecord {
    pub id: String,
    pub line: usize,
    pub error: String,
}

impl<R: Serialize> Report<R> {
    pub fn new(command: &'static str) -> Report<R> {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            records: Vec::new(),
            errors: Vec::new(),
        }
    }

    /// Pretty-prints the report to stdout (deterministic field order).
    pub fn print(&self) {
        println!(
            "{}",
            serde_json::to_string_pretty(self).expect("reports serialize")
        );
    }
}

/// The structural summary embedded in each record.
#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MetricsJson {
    pub order: usize,
    pub size: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub diameter: String,
    pub component_count: usize,
    /// α(G); computed only when the order is at most [`ALPHA_CAP`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independence_number: Option<usize>,
}

/// Largest order for which reports compute the independence number.
pub const ALPHA_CAP: usize = 32;

impl MetricsJson {
    pub fn for_graph(g: &Graph) -> MetricsJson {
        let m = g.metrics();
        MetricsJson {
            order: m.order,
            size: m.size,
            max_degree: m.max_degree,
            min_degree: m.min_degree,
            diameter: steps_str(m.diameter),
            component_count: m.component_count,
            independence_number: (m.order <= ALPHA_CAP).then(|| g.independence_number()),
        }
    }
}

/// `"3"` or `"infinity"`.
pub fn steps_str(s: Steps) -> String {
    match s {
        Steps::Finite(t) => t.to_string(),
        Steps::Infinite => "infinity".to_string(),
    }
}

/// `"7"` for integers, `"5/2"` otherwise.
pub fn rational_str(r: Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `"5,16"`; empty string for the empty set.
pub fn set_str(s: &VertexSet) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

/// Parses `--omega`: an integer `"2"` or a fraction `"a/b"`, must be > 0.
pub fn parse_omega(text: &str) -> Result<Rational, CliError> {
    let bad = || CliError::input(format!("--omega must be an integer or \"a/b\", got {text:?}"));
    let text = text.trim();
    let (a, b) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text, "1"),
    };
    let a: i64 = a.parse().map_err(|_| bad())?;
    let b: i64 = b.parse().map_err(|_| bad())?;
    if b == 0 {
        return Err(bad());
    }
    let omega = Rational::new(a, b);
    if omega <= Rational::new(0, 1) {
        return Err(CliError::input(format!(
            "--omega must be positive, got {text}"
        )));
    }
    Ok(omega)
}

/// Parses `--set`: comma-separated vertex indices, all below `n`, no
/// repeats. The empty string is the empty set.
pub fn parse_set(text: &str, n: usize) -> Result<VertexSet, String> {
    let mut set = VertexSet::empty(n);
    let text = text.trim();
    if text.is_empty() {
        return Ok(set);
    }
    for part in text.split(',') {
        let v: usize = part
            .trim()
            .parse()
            .map_err(|_| format!("--set entry {:?} is not a vertex index", part.trim()))?;
        if v >= n {
            return Err(format!(
                "--set vertex {v} is out of range for a graph on {n} vertices"
            ));
        }
        if !set.insert(v) {
            return Err(format!("--set lists vertex {v} twice"));
        }
    }
    Ok(set)
}
