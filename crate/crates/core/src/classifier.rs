//! Structural classification of the extreme PSD throttling values.
//!
//! Five thresholds of `th₊(G)` admit search-free characterizations, and this
//! module implements each as a pure structural predicate:
//!
//! * `th₊(G) = 1` ⟺ `G = K₁` ([`is_thp_one`]);
//! * `th₊(G) = 2` ⟺ `G` is a star `K₁,ₙ₋₁` or `2K₁` ([`is_thp_two`]);
//! * `th₊(G) = 3` ⟺ one of three structural conditions holds
//!   ([`is_thp_three`]): a small-component shape (`3K₁`, or exactly two
//!   components that are each a star or `K₁` with at least one star), a
//!   tree of diameter three or four, or — for a connected graph that has a
//!   cycle or is a tree of diameter five — a *dominating pair* `{u, v}`
//!   ([`dominating_pair_ok`]): `N[u] ∪ N[v] = V(G)`, every other vertex
//!   has degree at most two, and no two vertices of `N(u) ∖ {v}` (nor of
//!   `N(v) ∖ {u}`) are adjacent. The pair conditions hold exactly when
//!   `pt₊(G; {u, v}) ≤ 1`, so the pair is independently checkable with the
//!   forcing engine.
//! * for connected `G`: `th₊(G) = n` ⟺ `G = Kₙ`;
//! * for connected `G`: `th₊(G) ≥ n − 1` ⟺ `G ∈ 𝒢`, the family of graphs
//!   with independence number at most two and no induced five-cycle, house,
//!   or double diamond ([`in_family_g`]). Each forbidden pattern `H` is
//!   forbidden for a reason: it carries a forcing set attaining
//!   `ω|S| + pt₊ = |V(H)| − 2`, recorded as a fixture
//!   ([`forbidden_fixture`]) so tests can re-verify it by propagation.
//!
//! [`classify`] runs every predicate and assembles the verdicts. The two
//! high-end characterizations assume connectivity, so on a disconnected
//! graph [`classify`] reports them as *not asserted* (no claim either way)
//! rather than extrapolating.

use serde::Serialize;

use crate::graph::{generate, Graph, Steps, VertexSet};

// ============================================================================
// Verdict types
// ============================================================================

/// The extreme `th₊` classes with structural characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ExtremeClass {
    /// `th₊ = 1`: the one-vertex graph.
    ThpOne,
    /// `th₊ = 2`: a star or `2K₁`.
    ThpTwo,
    /// `th₊ = 3`: the three-condition characterization.
    ThpThree,
    /// `th₊ = n` (asserted for connected graphs): complete.
    ThpEqualsN,
    /// `th₊ ≥ n − 1` (asserted for connected graphs): membership in `𝒢`.
    ThpAtLeastNminus1,
}

impl std::fmt::Display for ExtremeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ExtremeClass::ThpOne => "thp=1",
            ExtremeClass::ThpTwo => "thp=2",
            ExtremeClass::ThpThree => "thp=3",
            ExtremeClass::ThpEqualsN => "thp=n",
            ExtremeClass::ThpAtLeastNminus1 => "thp>=n-1",
        })
    }
}

/// The three forbidden induced subgraphs of the family `𝒢`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Obstruction {
    /// The five-cycle `C₅`.
    C5,
    /// The house: a four-cycle with a roof apex.
    House,
    /// The double diamond: two diamonds (`K₄ − e`) glued along a shared
    /// edge; six vertices, nine edges.
    DoubleDiamond,
}

impl std::fmt::Display for Obstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Obstruction::C5 => "C5",
            Obstruction::House => "house",
            Obstruction::DoubleDiamond => "double-diamond",
        })
    }
}

/// The outcome of the `𝒢`-membership test, with a rejection witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum FamilyGVerdict {
    /// `α(G) ≤ 2` and no forbidden induced subgraph.
    Member,
    /// Three pairwise non-adjacent vertices (so `α(G) ≥ 3`).
    IndependentTriple { vertices: [usize; 3] },
    /// An induced copy of a forbidden pattern; `vertices[i]` hosts pattern
    /// vertex `i`.
    ForbiddenInduced {
        pattern: Obstruction,
        vertices: Vec<usize>,
    },
}

impl FamilyGVerdict {
    /// Is this verdict `Member`?
    pub fn is_member(&self) -> bool {
        matches!(self, FamilyGVerdict::Member)
    }
}

/// Everything the structural classifiers can say about one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// The classes asserted to hold.
    pub classes: Vec<ExtremeClass>,
    /// Classes whose characterizations assume connectivity, listed here
    /// (with no claim either way) when the graph is disconnected.
    pub not_asserted: Vec<ExtremeClass>,
    /// The dominating pair, when `th₊ = 3` was established via one.
    pub pair_witness: Option<(usize, usize)>,
    /// The `𝒢`-membership verdict (computed for every graph; it implies
    /// `th₊ ≥ n − 1` only for connected graphs).
    pub family_g: FamilyGVerdict,
}

impl Classification {
    /// Is `class` asserted to hold?
    pub fn has(&self, class: ExtremeClass) -> bool {
        self.classes.contains(&class)
    }

    /// Is `class` explicitly unasserted (connectivity hypothesis unmet)?
    pub fn is_not_asserted(&self, class: ExtremeClass) -> bool {
        self.not_asserted.contains(&class)
    }
}

// ============================================================================
// Low-end predicates: th₊ = 1, 2, 3
// ============================================================================

/// `th₊(G) = 1` ⟺ `G = K₁`.
pub fn is_thp_one(g: &Graph) -> bool {
    g.order() == 1
}

/// Is `g` a star `K₁,ₙ₋₁` (n ≥ 2): one center adjacent to everything else,
/// and no other edges? `K₂ = K₁,₁` counts.
pub fn is_star(g: &Graph) -> bool {
    let n = g.order();
    // Δ = n−1 pins every edge to one center; m = n−1 then leaves no others.
    n >= 2 && g.size() == n - 1 && g.max_degree() == n - 1
}

/// `th₊(G) = 2` ⟺ `G` is a star `K₁,ₙ₋₁` or `G = 2K₁`.
pub fn is_thp_two(g: &Graph) -> bool {
    is_star(g) || (g.order() == 2 && g.size() == 0)
}

/// How a `th₊ = 3` verdict was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ThpThreeRoute {
    /// `3K₁`, or two components each a star or `K₁` with a star among them.
    SmallComponents,
    /// A tree of diameter three or four.
    TreeDiameter,
    /// Connected with a cycle (or a tree of diameter five) and a dominating
    /// pair `(u, v)`.
    Pair(usize, usize),
}

/// `th₊(G) = 3` ⟺ one of the three structural conditions holds; see the
/// module docs. Orders below three always fail (`th₊ ≤ 2` there).
pub fn is_thp_three(g: &Graph) -> bool {
    thp_three_route(g).is_some()
}

fn thp_three_route(g: &Graph) -> Option<ThpThreeRoute> {
    if g.order() < 3 {
        return None;
    }
    let comps = g.components();
    match comps.len() {
        1 => connected_thp_three(g),
        2 => {
            // Two components, each a star or a K₁ on its own vertex set,
            // with at least one star: two blue vertices finish in one round.
            let mut stars = 0;
            for comp in &comps {
                let (sub, _) = g.induced(comp);
                if is_star(&sub) {
                    stars += 1;
                } else if sub.order() != 1 {
                    return None;
                }
            }
            (stars >= 1).then_some(ThpThreeRoute::SmallComponents)
        }
        // Three components force three blue vertices, and a fourth vertex
        // would push the value past three: only 3K₁ qualifies.
        3 if g.size() == 0 => Some(ThpThreeRoute::SmallComponents),
        _ => None,
    }
}

fn connected_thp_three(g: &Graph) -> Option<ThpThreeRoute> {
    if g.is_tree() {
        match g.diameter() {
            Steps::Finite(3) | Steps::Finite(4) => Some(ThpThreeRoute::TreeDiameter),
            Steps::Finite(5) => {
                find_dominating_pair(g).map(|(u, v)| ThpThreeRoute::Pair(u, v))
            }
            _ => None,
        }
    } else {
        // Connected and not a tree: there is a cycle.
        find_dominating_pair(g).map(|(u, v)| ThpThreeRoute::Pair(u, v))
    }
}

/// Do `u, v` form a dominating pair: `N[u] ∪ N[v] = V(G)`, every vertex
/// outside `{u, v}` has degree at most two, and no two vertices of
/// `N(u) ∖ {v}` (nor of `N(v) ∖ {u}`) are adjacent?
///
/// These conditions hold exactly when `pt₊(G; {u, v}) ≤ 1`: coverage plus
/// the degree cap force every white component to be a single vertex or a
/// single edge, and the same-side non-adjacency gives each white vertex a
/// private blue dominator.
pub fn dominating_pair_ok(g: &Graph, u: usize, v: usize) -> bool {
    let n = g.order();
    if u == v || u >= n || v >= n {
        return false;
    }
    let mut covered = g.neighbors(u).union(g.neighbors(v));
    covered.insert(u);
    covered.insert(v);
    if covered.len() != n {
        return false;
    }
    for w in g.vertices() {
        if w != u && w != v && g.degree(w) > 2 {
            return false;
        }
    }
    for (center, other) in [(u, v), (v, u)] {
        let mut side = g.neighbors(center).clone();
        side.remove(other);
        for a in side.iter() {
            if g.neighbors(a).intersection_len(&side) > 0 {
                return false;
            }
        }
    }
    true
}

/// The lexicographically first pair `(u, v)` with `u < v` passing
/// [`dominating_pair_ok`], if any.
pub fn find_dominating_pair(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    (0..n).find_map(|u| {
        ((u + 1)..n)
            .find(|&v| dominating_pair_ok(g, u, v))
            .map(|v| (u, v))
    })
}

// ============================================================================
// The family 𝒢 and the high-end predicates
// ============================================================================

/// Tests membership in `𝒢`: `α(G) ≤ 2` and no induced `C₅`, house, or
/// double diamond. On rejection the verdict carries a witness — an
/// independent triple or an induced embedding — verifiable directly
/// against the adjacency relation.
pub fn in_family_g(g: &Graph) -> FamilyGVerdict {
    if let Err(vertices) = g.alpha_at_most_2() {
        return FamilyGVerdict::IndependentTriple { vertices };
    }
    for pattern in [Obstruction::C5, Obstruction::House, Obstruction::DoubleDiamond] {
        let (h, _) = forbidden_fixture(pattern);
        if let Some(vertices) = g.find_induced(&h) {
            return FamilyGVerdict::ForbiddenInduced { pattern, vertices };
        }
    }
    FamilyGVerdict::Member
}

/// A forbidden pattern together with a forcing set attaining
/// `|S| + pt₊ = |V| − 2` on it, the value that rules the pattern out of
/// `𝒢`. Re-verify with [`crate::throttle::throttle_of_set`].
pub fn forbidden_fixture(which: Obstruction) -> (Graph, VertexSet) {
    match which {
        Obstruction::C5 => (generate::cycle(5), VertexSet::from_vertices(5, [1, 3])),
        Obstruction::House => (generate::house(), VertexSet::from_vertices(5, [1, 4])),
        Obstruction::DoubleDiamond => (
            generate::double_diamond(),
            VertexSet::from_vertices(6, [1, 4]),
        ),
    }
}

// ============================================================================
// Assembly
// ============================================================================

/// Runs every structural classifier on `g` and assembles the verdicts.
///
/// For a connected graph, `ThpEqualsN` is asserted exactly for complete
/// graphs and `ThpAtLeastNminus1` exactly for members of `𝒢`; the two can
/// co-apply (`Kₙ ∈ 𝒢`). For a disconnected graph those characterizations
/// do not apply, and both classes are listed in `not_asserted` instead.
pub fn classify(g: &Graph) -> Classification {
    let mut classes = Vec::new();
    let mut not_asserted = Vec::new();
    let mut pair_witness = None;

    if is_thp_one(g) {
        classes.push(ExtremeClass::ThpOne);
    }
    if is_thp_two(g) {
        classes.push(ExtremeClass::ThpTwo);
    }
    if let Some(route) = thp_three_route(g) {
        classes.push(ExtremeClass::ThpThree);
        if let ThpThreeRoute::Pair(u, v) = route {
            pair_witness = Some((u, v));
        }
    }

    let family_g = in_family_g(g);
    if g.order() > 0 && g.is_connected() {
        if g.is_complete() {
            classes.push(ExtremeClass::ThpEqualsN);
        }
        if family_g.is_member() {
            classes.push(ExtremeClass::ThpAtLeastNminus1);
        }
    } else {
        not_asserted.push(ExtremeClass::ThpEqualsN);
        not_asserted.push(ExtremeClass::ThpAtLeastNminus1);
    }

    Classification {
        classes,
        not_asserted,
        pair_witness,
        family_g,
    }
}

// ============================================================================
// Tests
// ============================================================================
