//! A plain-text edge-list format.
//!
//! The first non-blank line is a header `n m` (vertex count, edge count);
//! each of the following `m` non-blank lines is one edge `u v` with
//! 0-indexed endpoints. Blank lines are ignored everywhere. Errors carry
//! 1-based line numbers from the original input.
//!
//! ```text
//! 4 3
//! 0 1
//! 1 2
//! 2 3
//! ```

use super::Graph;
use crate::error::EdgeListError;

/// Parses the edge-list format into a [`Graph`].
///
/// # Errors
/// Reports a malformed header, malformed edge lines, an edge count that
/// disagrees with the header, and simple-graph violations (loops,
/// duplicates, out-of-range endpoints), each with its line number.
pub fn parse(input: &str) -> Result<Graph, EdgeListError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (_, header) = lines.next().ok_or_else(|| EdgeListError::BadHeader {
        found: String::new(),
    })?;
    let mut parts = header.split_whitespace();
    let (n, m) = match (
        parts.next().and_then(|t| t.parse::<usize>().ok()),
        parts.next().and_then(|t| t.parse::<usize>().ok()),
        parts.next(),
    ) {
        (Some(n), Some(m), None) => (n, m),
        _ => {
            return Err(EdgeListError::BadHeader {
                found: header.to_string(),
            })
        }
    };

    let mut g = Graph::empty(n).map_err(|source| EdgeListError::Graph { line: 1, source })?;
    let mut count = 0usize;
    for (line, text) in lines {
        let mut parts = text.split_whitespace();
        let (u, v) = match (
            parts.next().and_then(|t| t.parse::<usize>().ok()),
            parts.next().and_then(|t| t.parse::<usize>().ok()),
            parts.next(),
        ) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(EdgeListError::BadEdge {
                    line,
                    found: text.to_string(),
                })
            }
        };
        count += 1;
        if count > m {
            return Err(EdgeListError::WrongEdgeCount {
                expected: m,
                found: count,
            });
        }
        g.add_edge(u, v)
            .map_err(|source| EdgeListError::Graph { line, source })?;
    }
    if count < m {
        return Err(EdgeListError::WrongEdgeCount {
            expected: m,
            found: count,
        });
    }
    Ok(g)
}

/// Formats a [`Graph`] in the edge-list format, edges sorted, with a
/// trailing newline.
pub fn format(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
