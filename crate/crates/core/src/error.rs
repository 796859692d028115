//! Error types shared across the crate.
//!
//! Each error carries enough context to point at the offending input: graph
//! construction errors name the vertex or edge, parse errors name the byte
//! offset, and solver errors report how much of the search completed.

use thiserror::Error;

/// Errors from building or mutating a [`crate::Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// Graphs here have at least one vertex; order zero is rejected rather
    /// than given ad-hoc conventions.
    #[error("graph order must be at least 1")]
    OrderZero,
    /// A vertex index was `>= n`.
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    /// An edge joined a vertex to itself; simple graphs have no loops.
    #[error("loop at vertex {v} is not allowed in a simple graph")]
    LoopEdge { v: usize },
    /// The same edge was listed twice; simple graphs have no multi-edges.
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    /// The requested order exceeds the supported maximum.
    #[error("graph order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
}

/// Errors from parsing or encoding the graph6 format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    /// The input was empty after stripping an optional format header.
    #[error("empty graph6 string")]
    Empty,
    /// A byte outside the printable graph6 range `0x3f..=0x7e`.
    #[error("invalid graph6 byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    /// The string ended before the declared adjacency bits were complete.
    #[error("truncated graph6 string: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    /// Extra bytes after the adjacency bits.
    #[error("trailing data after graph6 payload at offset {offset}")]
    TrailingData { offset: usize },
    /// Nonzero padding bits after the adjacency matrix.
    #[error("nonzero padding bits in final graph6 byte")]
    NonzeroPadding,
    /// The declared order was zero; graphs here have at least one vertex.
    #[error("graph6 order 0 is not supported: graphs have at least one vertex")]
    OrderZero,
    /// The declared order exceeds the configured cap.
    #[error("graph6 order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
}

/// Errors from parsing the plain edge-list format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    /// The header line `n m` was missing or malformed.
    #[error("line 1: expected header `n m`, found {found:?}")]
    BadHeader { found: String },
    /// An edge line did not consist of two vertex indices.
    #[error("line {line}: expected edge `u v`, found {found:?}")]
    BadEdge { line: usize, found: String },
    /// The header promised `m` edges but a different number followed.
    #[error("expected {expected} edge lines, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    /// The edges violated the simple-graph constraints.
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// Errors from the exact throttling solver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    /// The graph is larger than the search budget allows.
    #[error("graph order {n} exceeds the budget's maximum order {max_order}")]
    GraphTooLarge { n: usize, max_order: usize },
    /// The subset or wall-clock budget ran out before the search finished.
    /// `subsets_examined` reports how far the search got.
    #[error("search budget exhausted after examining {subsets_examined} candidate sets")]
    BudgetExhausted { subsets_examined: u64 },
    /// The weight must be positive.
    #[error("throttling weight must be positive, got {omega}")]
    NonPositiveWeight { omega: String },
}
