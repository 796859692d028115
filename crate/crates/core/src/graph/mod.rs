//! Simple undirected graphs on bitmask vertex sets.
//!
//! Vertices are `0..n`. Adjacency is stored as one [`VertexSet`] per vertex,
//! so neighborhood intersections, unions, and popcounts are word-parallel;
//! every hot loop in the forcing engine and the throttling solver reduces to
//! a handful of `u64` operations for graphs with at most 64 vertices.
//!
//! Submodules provide IO and generators:
//!
//! * [`graph6`] — the compact ASCII format used by nauty and friends.
//! * [`edgelist`] — a plain `n m` + `u v` lines text format.
//! * [`generate`] — paths, cycles, complete (bipartite) graphs, stars,
//!   full binary trees, regular trees, Cartesian products, disjoint unions,
//!   and the small named graphs used by the classifier test fixtures.

pub mod edgelist;
pub mod generate;
pub mod graph6;
mod structure;

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use smallvec::{smallvec, SmallVec};

use crate::error::GraphError;

/// Largest graph order this crate will construct.
///
/// The adjacency representation costs `n²` bits, so the cap keeps a single
/// graph under ~8 MiB. The exact solvers have far smaller practical limits;
/// this cap only protects IO paths from pathological headers.
pub const MAX_ORDER: usize = 8192;

// ============================================================================
// Metrics
// ============================================================================

/// A structural summary of one graph, as produced by [`Graph::metrics`].
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GraphMetrics {
    /// Number of vertices.
    pub order: usize,
    /// Number of edges.
    pub size: usize,
    /// Largest vertex degree (0 for `K₁`).
    pub max_degree: usize,
    /// Smallest vertex degree.
    pub min_degree: usize,
    /// Largest eccentricity; infinite when the graph is disconnected.
    pub diameter: Steps,
    /// Per-vertex eccentricities, indexed by vertex.
    pub eccentricity: Vec<Steps>,
    /// The independence number α, when a caller chose to compute it.
    pub independence_number: Option<usize>,
    /// Number of connected components.
    pub component_count: usize,
}

impl GraphMetrics {
    /// Returns the summary with the independence number filled in.
    pub fn with_independence_number(mut self, alpha: usize) -> GraphMetrics {
        self.independence_number = Some(alpha);
        self
    }
}

// ============================================================================
// Steps: ℕ ∪ {∞}
// ============================================================================

/// A count of rounds or BFS layers that may be infinite.
///
/// `Infinite` is a real outcome (propagation stalls, a vertex is
/// unreachable), not an error and not a sentinel integer. The derived order
/// places every `Finite` value below `Infinite`.
///
/// # Example
/// ```
/// use forcelab_core::Steps;
/// assert!(Steps::Finite(41) < Steps::Infinite);
/// assert_eq!(Steps::Finite(2).plus_finite(3), Steps::Finite(5));
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Steps {
    /// Finitely many rounds.
    Finite(u32),
    /// Propagation never finishes (or a vertex is unreachable).
    Infinite,
}

impl Steps {
    /// Returns the finite value, or `None` for `Infinite`.
    pub fn finite(self) -> Option<u32> {
        match self {
            Steps::Finite(t) => Some(t),
            Steps::Infinite => None,
        }
    }

    /// True when the count is finite.
    pub fn is_finite(self) -> bool {
        matches!(self, Steps::Finite(_))
    }

    /// Adds a finite increment, leaving `Infinite` unchanged.
    pub fn plus_finite(self, k: u32) -> Steps {
        match self {
            Steps::Finite(t) => Steps::Finite(t + k),
            Steps::Infinite => Steps::Infinite,
        }
    }
}

impl fmt::Display for Steps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Steps::Finite(t) => write!(f, "{t}"),
            Steps::Infinite => write!(f, "infinity"),
        }
    }
}

impl Serialize for Steps {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Steps::Finite(t) => serializer.serialize_u32(*t),
            Steps::Infinite => serializer.serialize_str("infinity"),
        }
    }
}

// ============================================================================
// VertexSet
// ============================================================================

/// A set of vertices of a fixed-order graph, stored as a bit vector.
///
/// Sets created for graphs with at most 64 vertices live entirely on the
/// stack. All binary operations require both operands to come from the same
/// order (same word count); this is checked in debug builds.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 1]>,
}

fn words_for(n: usize) -> usize {
    (n + 63) / 64 + usize::from(n == 0)
}

impl VertexSet {
    /// The empty set over a universe of `n` vertices.
    pub fn empty(n: usize) -> VertexSet {
        VertexSet {
            words: smallvec![0u64; words_for(n)],
        }
    }

    /// The full set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        let mut s = VertexSet::empty(n);
        for v in 0..n {
            s.words[v / 64] |= 1u64 << (v % 64);
        }
        s
    }

    /// Builds a set over `n` vertices from an iterator of members.
    ///
    /// # Panics
    /// Panics if a member is `>= n`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> VertexSet {
        let mut s = VertexSet::empty(n);
        for v in vertices {
            assert!(v < n, "vertex {v} out of range for universe of size {n}");
            s.insert(v);
        }
        s
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when the set has no members.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Membership test. Out-of-universe indices report `false`.
    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1u64 << (v % 64)) != 0)
    }

    /// Inserts `v`. Returns `true` when `v` was newly added.
    ///
    /// # Panics
    /// Panics if `v` is outside the universe this set was created for.
    pub fn insert(&mut self, v: usize) -> bool {
        let w = &mut self.words[v / 64];
        let bit = 1u64 << (v % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    /// Removes `v`. Returns `true` when `v` was present.
    pub fn remove(&mut self, v: usize) -> bool {
        match self.words.get_mut(v / 64) {
            Some(w) => {
                let bit = 1u64 << (v % 64);
                let had = *w & bit != 0;
                *w &= !bit;
                had
            }
            None => false,
        }
    }

    /// Smallest member, or `None` when empty.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// The unique member when the set is a singleton, else `None`.
    pub fn single_member(&self) -> Option<usize> {
        let mut found = None;
        for (i, &w) in self.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            if w & (w - 1) != 0 || found.is_some() {
                return None;
            }
            found = Some(i * 64 + w.trailing_zeros() as usize);
        }
        found
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> SetIter<'_> {
        SetIter {
            words: &self.words,
            word_index: 0,
            current: self.words[0],
        }
    }

    /// Collects the members in ascending order.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// In-place union.
    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// In-place intersection.
    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// In-place set difference (`self \ other`).
    pub fn remove_all(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Fresh union.
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    /// Fresh intersection.
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    /// Fresh difference (`self \ other`).
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.remove_all(other);
        s
    }

    /// Complement within the universe `{0, ..., n-1}`.
    ///
    /// # Panics
    /// Panics if `n` does not match the universe this set was created for.
    pub fn complement(&self, n: usize) -> VertexSet {
        assert_eq!(words_for(n), self.words.len(), "universe size mismatch");
        let mut s = VertexSet::full(n);
        s.remove_all(self);
        s
    }

    /// Number of members shared with `other`.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// True when every member of `self` is in `other`.
    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// True when the sets share no member.
    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Compares two sets as ascending vertex sequences (lexicographically).
    ///
    /// `{0, 5}` sorts before `{1, 2}`, and a set sorts before any proper
    /// extension of itself. This is the tie-breaking order used whenever a
    /// canonical witness must be chosen among equally good sets.
    pub fn cmp_lex(&self, other: &VertexSet) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    other => return other,
                },
            }
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct SetIter<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
}

impl Iterator for SetIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_index * 64 + bit)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = SetIter<'a>;

    fn into_iter(self) -> SetIter<'a> {
        self.iter()
    }
}

// ============================================================================
// Graph
// ============================================================================

/// A finite simple undirected graph on vertices `0..n`.
///
/// Loops and multi-edges are rejected at construction time, so every value
/// of this type is a simple graph.
///
/// # Example
/// ```
/// use forcelab_core::Graph;
/// let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
/// assert_eq!(g.order(), 4);
/// assert_eq!(g.size(), 3);
/// assert!(g.is_tree());
/// ```
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// # Errors
    /// Fails when `n = 0` (graphs here have at least one vertex) or when
    /// `n` exceeds [`MAX_ORDER`].
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::OrderZero);
        }
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { n, max: MAX_ORDER });
        }
        Ok(Graph {
            n,
            m: 0,
            adj: vec![VertexSet::empty(n); n],
        })
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// # Errors
    /// Fails on out-of-range endpoints, loops, duplicate edges (in either
    /// orientation), or `n > MAX_ORDER`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`.
    ///
    /// # Errors
    /// Fails on out-of-range endpoints, a loop, or an edge already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::LoopEdge { v });
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        Ok(())
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    /// True when the edge `{u, v}` is present.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// The neighborhood of `v` as a set.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All vertex degrees, indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Maximum degree Δ(G); `0` for graphs with no edges.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Iterates vertices `0..n`.
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The full vertex set `{0, ..., n-1}`.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    // ------------------------------------------------------------------
    // Connectivity and distances
    // ------------------------------------------------------------------

    /// Connected components of the subgraph induced on `within`, each as a
    /// vertex set of the ambient graph, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = within.clone();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::empty(self.n);
            comp.insert(start);
            let mut frontier = comp.clone();
            loop {
                let mut next = VertexSet::empty(self.n);
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(within);
                next.remove_all(&comp);
                if next.is_empty() {
                    break;
                }
                comp.union_with(&next);
                frontier = next;
            }
            unseen.remove_all(&comp);
            out.push(comp);
        }
        out
    }

    /// Connected components of the whole graph, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// True when the graph is connected. Graphs on `0` or `1` vertices count
    /// as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// BFS distances from a single source; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<u32>> {
        let mut sources = VertexSet::empty(self.n);
        sources.insert(source);
        self.distances_from_set(&sources)
    }

    /// Multi-source BFS distances; members of `sources` are at distance `0`,
    /// unreachable vertices report `None`.
    pub fn distances_from_set(&self, sources: &VertexSet) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for v in sources.iter() {
            dist[v] = Some(0);
            queue.push_back(v);
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for v in self.adj[u].iter() {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// The largest BFS distance from `sources` to a vertex outside
    /// `sources`: `max { dist(sources, v) : v ∉ sources }`.
    ///
    /// Returns `Finite(0)` when `sources` covers every vertex and
    /// `Infinite` when some outside vertex is unreachable (in particular
    /// when `sources` is empty but the graph is not).
    ///
    /// Propagation under either color change rule advances at most one BFS
    /// layer per round, so this value is a lower bound on the propagation
    /// time of `sources`.
    pub fn dist_set_to_complement(&self, sources: &VertexSet) -> Steps {
        let outside = sources.complement(self.n);
        if outside.is_empty() {
            return Steps::Finite(0);
        }
        if sources.is_empty() {
            return Steps::Infinite;
        }
        let dist = self.distances_from_set(sources);
        let mut max = 0;
        for v in outside.iter() {
            match dist[v] {
                Some(d) => max = max.max(d),
                None => return Steps::Infinite,
            }
        }
        Steps::Finite(max)
    }

    /// Diameter: the largest distance between any two vertices.
    ///
    /// Returns `Infinite` for disconnected graphs and `Finite(0)` for graphs
    /// on at most one vertex.
    pub fn diameter(&self) -> Steps {
        if self.n == 0 {
            return Steps::Finite(0);
        }
        let mut max = 0;
        for v in 0..self.n {
            for d in self.bfs_distances(v) {
                match d {
                    Some(d) => max = max.max(d),
                    None => return Steps::Infinite,
                }
            }
        }
        Steps::Finite(max)
    }

    /// Eccentricity of every vertex: `ecc(v) = max_u dist(v, u)`, infinite
    /// when some vertex is unreachable from `v`.
    pub fn eccentricities(&self) -> Vec<Steps> {
        (0..self.n)
            .map(|v| {
                let mut max = 0;
                for d in self.bfs_distances(v) {
                    match d {
                        Some(d) => max = max.max(d),
                        None => return Steps::Infinite,
                    }
                }
                Steps::Finite(max)
            })
            .collect()
    }

    /// The cheap structural summary: degrees, diameter, eccentricities and
    /// component count, all from one BFS sweep per vertex.
    ///
    /// `independence_number` is left `None` because computing it is
    /// exponential in the order; callers that want it filled in use
    /// [`GraphMetrics::with_independence_number`].
    pub fn metrics(&self) -> GraphMetrics {
        let degrees = self.degrees();
        let eccentricity = self.eccentricities();
        let diameter = eccentricity
            .iter()
            .copied()
            .max()
            .unwrap_or(Steps::Finite(0));
        GraphMetrics {
            order: self.n,
            size: self.size(),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            diameter,
            eccentricity,
            independence_number: None,
            component_count: self.components().len(),
        }
    }

    // ------------------------------------------------------------------
    // Derived graphs
    // ------------------------------------------------------------------

    /// The subgraph induced on `keep`, relabeled to `0..keep.len()` in
    /// ascending order of the original indices. Returns the graph and the
    /// map from new indices to original ones.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.to_vec();
        let mut index_of = vec![usize::MAX; self.n];
        for (new, &o) in old.iter().enumerate() {
            index_of[o] = new;
        }
        let mut g = Graph::empty(old.len()).expect("induced subgraph within order cap");
        for (new_u, &u) in old.iter().enumerate() {
            for v in self.adj[u].intersection(keep).iter() {
                if v > u {
                    g.add_edge(new_u, index_of[v])
                        .expect("induced edges are simple");
                }
            }
        }
        (g, old)
    }

    /// The graph obtained by deleting one vertex, relabeling as in
    /// [`Graph::induced`].
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let mut keep = self.vertex_set();
        keep.remove(v);
        self.induced(&keep).0
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("complement preserves order");
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.adj[u].contains(v) {
                    g.add_edge(u, v).expect("complement edges are simple");
                }
            }
        }
        g
    }

    // ------------------------------------------------------------------
    // Recognition
    // ------------------------------------------------------------------

    /// True when the graph is a tree (connected with `n - 1` edges, `n ≥ 1`).
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m == self.n - 1 && self.is_connected()
    }

    /// True when the graph is a cycle Cₙ (`n ≥ 3`, connected, 2-regular).
    pub fn is_cycle_graph(&self) -> bool {
        self.n >= 3
            && self.m == self.n
            && (0..self.n).all(|v| self.degree(v) == 2)
            && self.is_connected()
    }

    /// True when the graph is complete.
    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

// ============================================================================
// Tests
// ============================================================================
