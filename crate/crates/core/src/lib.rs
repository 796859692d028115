//! Zero forcing and positive semidefinite (PSD) zero forcing on small simple
//! graphs: propagation, forcing numbers, throttling, closed-form bounds with
//! witness constructions, and classifiers for the extreme throttling cases.
//!
//! # Color change rules
//!
//! Start from a set `S` of blue vertices; all others are white. Each rule is
//! applied in simultaneous rounds (every force in a round is decided from the
//! state at the start of the round):
//!
//! * **Standard**: a blue vertex `v` with exactly one white neighbor `w`
//!   forces `w` blue.
//! * **PSD**: let `W1, ..., Wk` be the vertex sets of the components of
//!   `G - B` where `B` is the current blue set. A blue vertex `v` forces a
//!   white `w ∈ Wi` when `w` is the only white neighbor of `v` in the induced
//!   subgraph on `Wi ∪ B`.
//!
//! `S` is a *forcing set* if repeated rounds color every vertex blue. The
//! *propagation time* `pt(G; S)` is the number of productive rounds (infinite
//! when propagation stalls), the *zero forcing number* `Z(G)` / `Z₊(G)` is
//! the minimum size of a forcing set, and the *(weighted) throttling number*
//! is `thᵂ(G) = min over forcing sets S of (ω·|S| + pt(G; S))`, with `ω = 1`
//! giving the ordinary throttling numbers `th(G)` and `th₊(G)`.
//!
//! # Module map
//!
//! * [`graph`] — bitmask vertex sets, the `Graph` type, components, BFS
//!   distances, generators for the named families, graph6 and edge-list IO.
//! * [`forcing`] — both color change rules: single rounds, full propagation
//!   with recorded forces, forcing forests, forcing numbers.
//! * [`throttle`] — exact (weighted) throttling by pruned subset search.
//! * [`formulas`] — closed forms, lower/upper bounds and the witness
//!   constructions that certify them.
//! * [`classifier`] — structural characterizations of the extreme PSD
//!   throttling values (1, 2, 3, n, ≥ n−1).
//! * [`census`] — exhaustive small-graph and small-tree enumeration up to
//!   isomorphism, used by the oracle-style test suites.
//!
//! The most common types are re-exported at the crate root.

#![forbid(unsafe_code)]

pub mod census;
pub mod classifier;
pub(crate) mod combi;
pub mod error;
pub mod forcing;
pub mod formulas;
pub mod graph;
pub mod throttle;


pub use classifier::{Classification, ExtremeClass, FamilyGVerdict, Obstruction};
pub use error::{EdgeListError, Graph6Error, GraphError, SolverError};
pub use forcing::{
    ForceEvent, ForcingForest, GraphPtResult, PropagationOutcome, Rule, ZeroForcingResult,
};
pub use graph::{Graph, GraphMetrics, Steps, VertexSet};
pub use throttle::{Objective, SearchBudget, ThrottleResult, ThrottleValue};


/// Exact rational scalar used for throttling weights and values.
pub type Rational = num::rational::Ratio<i64>;
