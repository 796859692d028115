//! The two color change rules: single rounds, full propagation with a
//! recorded force history, forcing forests, and zero forcing numbers.
//!
//! A *round* applies every force available from the state at the start of
//! the round simultaneously. Under the **standard** rule a blue vertex `v`
//! with exactly one white neighbor `w` forces `w`. Under the **PSD** rule
//! the white vertices are first split into the components `W1, ..., Wk` of
//! `G - B` (`B` the current blue set); a blue `v` forces `w ∈ Wi` when `w`
//! is `v`'s only neighbor inside `Wi`.
//!
//! The *propagation time* `pt(G; S)` is the number of productive rounds
//! until everything is blue — [`Steps::Infinite`] when propagation reaches a
//! fixpoint short of that. When several blue vertices could force the same
//! white vertex in a round, the recorded forcer is the lowest-indexed one;
//! this choice never affects which vertices become blue or when.

use serde::Serialize;

use crate::graph::{Graph, Steps, VertexSet};

// ============================================================================
// Rule and outcome types
// ============================================================================

/// Which color change rule to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    /// The standard zero forcing rule.
    Standard,
    /// The positive semidefinite zero forcing rule.
    Psd,
}

impl Rule {
    /// Both rules, standard first; handy for loops in tests and the CLI.
    pub const ALL: [Rule; 2] = [Rule::Standard, Rule::Psd];
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rule::Standard => write!(f, "standard"),
            Rule::Psd => write!(f, "psd"),
        }
    }
}

/// One force: in round `step` (1-based), `forcer` colored `forced` blue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ForceEvent {
    pub step: u32,
    pub forcer: usize,
    pub forced: usize,
}

/// The full record of a propagation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropagationOutcome {
    /// Number of productive rounds, or `Infinite` if a fixpoint was reached
    /// with white vertices remaining.
    pub steps: Steps,
    /// Every force, ordered by round and then by forced vertex. On a stalled
    /// run this records the productive prefix.
    pub events: Vec<ForceEvent>,
    /// Blue sets over time: `history[0]` is the starting set and
    /// `history[t]` the blue set after `t` productive rounds.
    pub history: Vec<VertexSet>,
}

impl PropagationOutcome {
    /// The blue set at the fixpoint.
    pub fn final_blue(&self) -> &VertexSet {
        self.history.last().expect("history always starts with S")
    }

    /// True when the starting set forced the whole graph.
    pub fn is_forcing(&self) -> bool {
        self.steps.is_finite()
    }
}

/// The forcing forest of a successful propagation: each forced vertex
/// points at its forcer, and the roots are exactly the starting set.
///
/// Under the standard rule every vertex forces at most once, so the forest
/// is a disjoint union of `|S|` paths (the forcing chains). Under the PSD
/// rule a vertex may force several times and the components are genuine
/// trees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcingForest {
    /// The starting blue set.
    pub roots: VertexSet,
    /// `parent[v]` is the forcer of `v`, or `None` for vertices of the
    /// starting set.
    pub parent: Vec<Option<usize>>,
    /// The underlying force events.
    pub events: Vec<ForceEvent>,
}

/// A zero forcing number together with a certified witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroForcingResult {
    /// The minimum size of a forcing set.
    pub number: usize,
    /// The lexicographically least forcing set of minimum size.
    pub witness: VertexSet,
}

/// The graph-level propagation time: the smallest propagation time over
/// all *minimum-size* forcing sets, with a witness attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphPtResult {
    /// The zero forcing number under the same rule.
    pub forcing_number: usize,
    /// `min { pt(G; S) : S a minimum-size forcing set }`.
    pub pt: Steps,
    /// The lexicographically least minimum-size set attaining `pt`.
    pub witness: VertexSet,
}

// ============================================================================
// Single rounds
// ============================================================================

/// Computes one simultaneous round of forces from the state `blue`.
///
/// Returns `(forcer, forced)` pairs sorted by forced vertex; the forcer of
/// each forced vertex is the lowest-indexed blue vertex eligible to force
/// it. An empty result means the state is a fixpoint.
pub fn step(rule: Rule, g: &Graph, blue: &VertexSet) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut claimed = VertexSet::empty(n);
    let mut out = Vec::new();
    match rule {
        Rule::Standard => {
            for v in blue.iter() {
                let mut white = g.neighbors(v).clone();
                white.remove_all(blue);
                if let Some(w) = white.single_member() {
                    if claimed.insert(w) {
                        out.push((v, w));
                    }
                }
            }
        }
        Rule::Psd => {
            let white_all = blue.complement(n);
            for comp in g.components_within(&white_all) {
                for v in blue.iter() {
                    let in_comp = g.neighbors(v).intersection(&comp);
                    if let Some(w) = in_comp.single_member() {
                        if claimed.insert(w) {
                            out.push((v, w));
                        }
                    }
                }
            }
        }
    }
    out.sort_unstable_by_key(|&(_, w)| w);
    out
}

/// Like [`step`] but only reports *which* vertices get forced, skipping
/// forcer bookkeeping. This is the solver's inner loop.
fn force_round(rule: Rule, g: &Graph, blue: &VertexSet) -> VertexSet {
    let n = g.order();
    let mut newly = VertexSet::empty(n);
    match rule {
        Rule::Standard => {
            for v in blue.iter() {
                let mut white = g.neighbors(v).clone();
                white.remove_all(blue);
                if let Some(w) = white.single_member() {
                    newly.insert(w);
                }
            }
        }
        Rule::Psd => {
            let white_all = blue.complement(n);
            for comp in g.components_within(&white_all) {
                for v in blue.iter() {
                    let in_comp = g.neighbors(v).intersection(&comp);
                    if let Some(w) = in_comp.single_member() {
                        newly.insert(w);
                    }
                }
            }
        }
    }
    newly
}

// ============================================================================
// Propagation
// ============================================================================

/// Runs propagation to its fixpoint, recording every force and every
/// intermediate blue set.
///
/// # Panics
/// Panics if `start` contains a vertex outside the graph.
pub fn propagate(rule: Rule, g: &Graph, start: &VertexSet) -> PropagationOutcome {
    let full = g.vertex_set();
    assert!(
        start.is_subset_of(&full),
        "starting set must consist of graph vertices"
    );
    let mut blue = start.clone();
    let mut history = vec![blue.clone()];
    let mut events = Vec::new();
    let mut round = 0u32;
    let steps = loop {
        if blue == full {
            break Steps::Finite(round);
        }
        let forces = step(rule, g, &blue);
        if forces.is_empty() {
            break Steps::Infinite;
        }
        round += 1;
        for &(forcer, forced) in &forces {
            events.push(ForceEvent {
                step: round,
                forcer,
                forced,
            });
            blue.insert(forced);
        }
        history.push(blue.clone());
    };
    // Propagation advances at most one BFS layer per round, so the distance
    // from S to its complement bounds the round count from below.
    debug_assert!(steps >= g.dist_set_to_complement(start));
    PropagationOutcome {
        steps,
        events,
        history,
    }
}

/// The propagation time `pt(G; start)` without recording the history.
pub fn propagation_time(rule: Rule, g: &Graph, start: &VertexSet) -> Steps {
    let full = g.vertex_set();
    let mut blue = start.clone();
    let mut round = 0u32;
    loop {
        if blue == full {
            return Steps::Finite(round);
        }
        let newly = force_round(rule, g, &blue);
        if newly.is_empty() {
            return Steps::Infinite;
        }
        round += 1;
        blue.union_with(&newly);
    }
}

/// Propagation time with an early exit: returns `None` as soon as the
/// round count is known to exceed `cap` (so `None` means `pt > cap`,
/// with `pt` possibly infinite), and `Some(pt)` otherwise — including
/// `Some(Infinite)` when propagation stalls within the cap.
pub fn propagation_time_capped(
    rule: Rule,
    g: &Graph,
    start: &VertexSet,
    cap: u32,
) -> Option<Steps> {
    let full = g.vertex_set();
    let mut blue = start.clone();
    let mut round = 0u32;
    loop {
        if blue == full {
            return Some(Steps::Finite(round));
        }
        let newly = force_round(rule, g, &blue);
        if newly.is_empty() {
            return Some(Steps::Infinite);
        }
        round += 1;
        if round > cap {
            return None;
        }
        blue.union_with(&newly);
    }
}

/// True when `start` forces the whole graph under `rule`.
pub fn is_forcing_set(rule: Rule, g: &Graph, start: &VertexSet) -> bool {
    propagation_time(rule, g, start).is_finite()
}

/// The forcing forest of a successful run, or `None` when `start` is not a
/// forcing set.
pub fn forcing_forest(rule: Rule, g: &Graph, start: &VertexSet) -> Option<ForcingForest> {
    let outcome = propagate(rule, g, start);
    if !outcome.is_forcing() {
        return None;
    }
    let mut parent = vec![None; g.order()];
    for e in &outcome.events {
        debug_assert!(parent[e.forced].is_none(), "each vertex is forced once");
        parent[e.forced] = Some(e.forcer);
    }
    Some(ForcingForest {
        roots: start.clone(),
        parent,
        events: outcome.events,
    })
}

// ============================================================================
// Zero forcing numbers and graph propagation time
// ============================================================================

/// Enumerates the `k`-subsets of the (sorted) component vertex list in
/// lexicographic order, calling `visit` until it returns `true`; reports
/// whether any call did.
fn any_subset<F: FnMut(&[usize]) -> bool>(vertices: &[usize], k: usize, mut visit: F) -> bool {
    let n = vertices.len();
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let subset: Vec<usize> = idx.iter().map(|&i| vertices[i]).collect();
        if visit(&subset) {
            return true;
        }
        if !crate::combi::next_combination(&mut idx, n) {
            return false;
        }
    }
}

/// The zero forcing number of one component, given as an induced subgraph,
/// together with the lexicographically least minimum forcing set (in the
/// subgraph's own labels).
fn component_forcing_number(rule: Rule, sub: &Graph) -> (usize, VertexSet) {
    let n = sub.order();
    let all: Vec<usize> = (0..n).collect();
    for k in 0..=n {
        let mut found = None;
        any_subset(&all, k, |subset| {
            let s = VertexSet::from_vertices(n, subset.iter().copied());
            if is_forcing_set(rule, sub, &s) {
                found = Some(s);
                true
            } else {
                false
            }
        });
        if let Some(s) = found {
            return (k, s);
        }
    }
    unreachable!("the full vertex set always forces");
}

/// The zero forcing number `Z(G)` (standard rule) or `Z₊(G)` (PSD rule),
/// with the lexicographically least minimum forcing set as a witness.
///
/// Both rules decompose over connected components: a set forces `G` exactly
/// when its restriction to each component forces that component, so the
/// number is the sum of the per-component numbers and the witness the union
/// of per-component witnesses. Runtime is exponential in the size of the
/// largest component; intended for small graphs.
pub fn zero_forcing_number(rule: Rule, g: &Graph) -> ZeroForcingResult {
    let mut number = 0;
    let mut witness = VertexSet::empty(g.order());
    for comp in g.components() {
        let (sub, map) = g.induced(&comp);
        let (k, local) = component_forcing_number(rule, &sub);
        number += k;
        for v in local.iter() {
            witness.insert(map[v]);
        }
    }
    ZeroForcingResult { number, witness }
}

/// The graph propagation time: `min { pt(G; S) : |S| = Z }` where `Z` is
/// the forcing number under `rule`, with the lexicographically least
/// minimum-size set attaining the minimum.
///
/// Decomposes over components — the graph value is the maximum of the
/// per-component minima, and each component independently takes its
/// lexicographically least minimum forcing set whose propagation time does
/// not exceed that maximum.
pub fn graph_propagation_time(rule: Rule, g: &Graph) -> GraphPtResult {
    struct Comp {
        sub: Graph,
        map: Vec<usize>,
        z: usize,
        min_pt: Steps,
    }
    let mut comps = Vec::new();
    for comp in g.components() {
        let (sub, map) = g.induced(&comp);
        let (z, _) = component_forcing_number(rule, &sub);
        let n = sub.order();
        let all: Vec<usize> = (0..n).collect();
        let mut min_pt = Steps::Infinite;
        any_subset(&all, z, |subset| {
            let s = VertexSet::from_vertices(n, subset.iter().copied());
            let pt = propagation_time(rule, &sub, &s);
            min_pt = min_pt.min(pt);
            false
        });
        debug_assert!(min_pt.is_finite(), "a minimum forcing set exists");
        comps.push(Comp {
            sub,
            map,
            z,
            min_pt,
        });
    }
    let pt = comps
        .iter()
        .map(|c| c.min_pt)
        .max()
        .unwrap_or(Steps::Finite(0));
    let mut witness = VertexSet::empty(g.order());
    let mut forcing_number = 0;
    for c in &comps {
        forcing_number += c.z;
        let all: Vec<usize> = (0..c.sub.order()).collect();
        let mut chosen = None;
        any_subset(&all, c.z, |subset| {
            let s = VertexSet::from_vertices(c.sub.order(), subset.iter().copied());
            if propagation_time(rule, &c.sub, &s) <= pt {
                chosen = Some(s);
                true
            } else {
                false
            }
        });
        let local = chosen.expect("some minimum set attains the component minimum");
        for v in local.iter() {
            witness.insert(c.map[v]);
        }
    }
    GraphPtResult {
        forcing_number,
        pt,
        witness,
    }
}

// ============================================================================
// Tests
// ============================================================================
