//! Closed-form values, lower/upper bounds, and witness constructions for
//! (PSD) throttling — all in exact integer or rational arithmetic.
//!
//! # The snake decomposition for paths and cycles
//!
//! Write `n = k²/2 + r` where `k` is the largest even number with
//! `k²/2 ≤ n` and `0 ≤ r ≤ 2k + 1` ([`snake_params`]). Then
//!
//! ```text
//! th₊(Pₙ) = th₊(Cₙ) = k      if r ≤ k/2
//!                     k + 1  if k/2 + 1 ≤ r ≤ 3k/2 + 1
//!                     k + 2  if 3k/2 + 2 ≤ r ≤ 2k + 1
//! ```
//!
//! for `n ≥ 1` (paths) and `n ≥ 4` (cycles); `th₊(C₃) = 3` is the one
//! exception, because a single blue vertex on a triangle has two neighbors
//! in the lone white component and never forces. The piecewise value
//! coincides with the closed form `⌈√(2n) − ½⌉` ([`lb_delta2`]);
//! [`witness_path`] and [`witness_cycle`] build start sets attaining it
//! with propagation time exactly `k/2`.
//!
//! # Degree growth bounds
//!
//! A PSD forcing set of size `s` with finite propagation time `p` in a
//! graph of order `n` and maximum degree `Δ` satisfies
//!
//! ```text
//! n ≤ s(1 + 2p)                          if Δ = 2
//! n ≤ s(1 + Δ((Δ-1)^p − 1)/(Δ-2))        if Δ ≥ 3
//! ```
//!
//! and under the standard rule `n ≤ s(1 + p)` for every graph (forces
//! travel along at most `s` disjoint chains). These yield the lower bounds
//! [`lb_delta2`], [`lb_delta_ge3`], the per-size floors
//! [`min_pt_for_size`] used by the solver, and the exact weighted bound
//! [`weighted_lb`].
//!
//! # Standard throttling on paths and cycles
//!
//! With `m = ⌊√n⌋` and `r = n − m²` ([`std_cycle_params`]):
//!
//! ```text
//! th(Pₙ) = ⌈2√n − 1⌉ (least t with (t+1)² ≥ 4n)
//! th(Cₙ) = 2m − 1  if r = 0 and m even      (n ≥ 3)
//!          2m      if r = 0 and m odd, or 0 < r ≤ m
//!          2m + 1  if m < r ≤ 2m
//! ```
//!
//! so the cycle value exceeds the path value exactly at odd perfect
//! squares. [`witness_std_cycle`] attains the cycle value.

use crate::forcing::Rule;
use crate::graph::VertexSet;
use crate::Rational;
use num::Zero;

// ============================================================================
// Small integer helpers
// ============================================================================

/// Least `s ≥ 0` with `s² ≥ x`.
fn ceil_sqrt(x: u128) -> u128 {
    let s = x.isqrt();
    if s * s < x {
        s + 1
    } else {
        s
    }
}

// ============================================================================
// PSD lower bounds from degree growth
// ============================================================================

/// The PSD throttling lower bound for maximum degree 2:
/// `⌈√(2n) − ½⌉`, computed exactly as the least `t` with `(2t+1)² ≥ 8n`.
pub fn lb_delta2(n: u64) -> u64 {
    let s = ceil_sqrt(8 * n as u128) as u64;
    s.saturating_sub(1).div_ceil(2)
}

/// The weighted counterpart of [`lb_delta2`]: `⌈√(2ωn) − ½⌉`, the least
/// integer `t` with `b(2t+1)² ≥ 8an` for `ω = a/b`, evaluated in exact
/// integer arithmetic.
///
/// This is a lower bound on `th₊^ω(G)` when `Δ(G) ≤ 2` **and `ω` is a
/// positive integer**: the objective `ω·|S| + pt` is then integer-valued,
/// so it may be rounded up to the continuous bound's ceiling. For
/// fractional weights the ceiling step is unsound — the optimum can land
/// strictly between `√(2ωn) − ½` and its ceiling (on `C₃` at `ω = ½` the
/// full vertex set achieves `3/2`, below `⌈√3 − ½⌉ = 2`) — so use
/// [`weighted_degree_two_bound_holds`] instead.
///
/// # Panics
/// Panics if `omega ≤ 0` or the intermediate product overflows `u128`
/// (far beyond any graph this crate handles).
pub fn lb_delta2_weighted(n: u64, omega: Rational) -> u64 {
    assert!(omega > Rational::zero(), "weight must be positive");
    let (a, b) = (*omega.numer() as u128, *omega.denom() as u128);
    let rhs = 8u128
        .checked_mul(a)
        .and_then(|x| x.checked_mul(n as u128))
        .expect("weighted bound inputs too large");
    let s = ceil_sqrt(rhs.div_ceil(b)) as u64;
    s.saturating_sub(1).div_ceil(2)
}

/// Whether `value` satisfies the continuous degree-2 weighted bound
/// `value ≥ √(2ωn) − ½`, decided exactly as `(2·value + 1)² ≥ 8ωn` in
/// rational arithmetic (both sides are nonnegative, so squaring preserves
/// the order).
///
/// Every weighted PSD throttling value of a graph with `Δ(G) ≤ 2` passes
/// this check, whatever the positive rational weight. It is the
/// pre-rounding form of [`lb_delta2_weighted`], which is sharper but only
/// valid for integer weights.
///
/// # Panics
/// Panics if `omega ≤ 0`.
pub fn weighted_degree_two_bound_holds(n: u64, omega: Rational, value: Rational) -> bool {
    assert!(omega > Rational::zero(), "weight must be positive");
    let side = Rational::from_integer(2) * value + Rational::from_integer(1);
    let rhs = Rational::from_integer(8) * omega * Rational::from_integer(n as i64);
    side * side >= rhs
}

/// The PSD throttling lower bound for maximum degree `delta ≥ 3` at start
/// size `s0 ≥ 1`: `s0 + p` for the least `p ≥ 0` with
/// `s0·Δ·(Δ-1)^p ≥ (Δ-2)·n + 2·s0`.
///
/// # Panics
/// Panics if `delta < 3` or `s0 = 0`.
pub fn lb_delta_ge3(n: u64, delta: u64, s0: u64) -> u64 {
    assert!(delta >= 3, "lb_delta_ge3 requires delta >= 3, got {delta}");
    assert!(s0 >= 1, "lb_delta_ge3 requires s0 >= 1");
    let (d, s) = (delta as u128, s0 as u128);
    let rhs = (d - 2) * n as u128 + 2 * s;
    let mut p = 0u64;
    loop {
        let pow = (d - 1).saturating_pow(p as u32);
        if s.saturating_mul(d).saturating_mul(pow) >= rhs {
            return s0 + p;
        }
        p += 1;
    }
}

/// A lower bound on `th₊(G)` from the order and maximum degree alone.
///
/// Dispatches on `delta`: edgeless graphs force nothing (`th₊ = n`); for
/// `Δ = 1` every edge needs a blue endpoint (`th₊ ≥ ⌈n/2⌉ + 1`); `Δ = 2`
/// uses [`lb_delta2`]; `Δ ≥ 3` minimizes [`lb_delta_ge3`] over the start
/// size.
pub fn psd_throttle_lower_bound(n: u64, delta: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    match delta {
        0 => n,
        1 => n.div_ceil(2) + 1,
        2 => lb_delta2(n),
        _ => {
            let mut best = n; // s0 = n, p = 0
            for s0 in 1..=n {
                if s0 >= best {
                    break;
                }
                best = best.min(lb_delta_ge3(n, delta, s0));
            }
            best
        }
    }
}

/// A lower bound on the propagation time of *any* forcing set of size `s`
/// in a graph of order `n` and maximum degree `delta`, or `None` when no
/// forcing set of that size can exist. This is the growth-bound floor used
/// by the exact solver to skip entire sizes.
pub fn min_pt_for_size(rule: Rule, n: usize, delta: usize, s: usize) -> Option<u64> {
    if s >= n {
        return Some(0);
    }
    if s == 0 || delta == 0 {
        // A white vertex with no blue-reachable neighbors is never forced.
        return None;
    }
    let need = (n - s) as u64;
    match rule {
        Rule::Standard => Some(need.div_ceil(s as u64)),
        Rule::Psd => match delta {
            1 => Some(1),
            2 => Some(need.div_ceil(2 * s as u64)),
            d => {
                // Least p with s·Δ·((Δ-1)^p − 1) ≥ (n-s)(Δ-2), exactly.
                let (d, s) = (d as u128, s as u128);
                let rhs = (need as u128) * (d - 2);
                let mut p = 0u64;
                loop {
                    let pow = (d - 1).saturating_pow(p as u32);
                    if s.saturating_mul(d).saturating_mul(pow - 1) >= rhs {
                        return Some(p);
                    }
                    p += 1;
                }
            }
        },
    }
}

/// Checks the degree growth constraint for a forcing set of size `s` with
/// finite propagation time `p` in a graph of order `n` and maximum degree
/// `delta`. Every finite propagation satisfies this.
pub fn growth_constraint_holds(rule: Rule, n: u64, delta: u64, s: u64, p: u64) -> bool {
    let (n, s, p) = (n as u128, s as u128, p as u128);
    match rule {
        Rule::Standard => n <= s.saturating_mul(1 + p),
        Rule::Psd => match delta {
            0 => s >= n,
            1 => n <= 2 * s && (p <= 1 || s >= n),
            2 => n <= s.saturating_mul(1 + 2 * p),
            d => {
                let d = d as u128;
                let pow = (d - 1).saturating_pow(p.min(u32::MAX as u128) as u32);
                // n(Δ-2) ≤ s(Δ-2) + s·Δ·((Δ-1)^p − 1), kept in integers.
                n * (d - 2) <= s.saturating_mul(d - 2).saturating_add(
                    s.saturating_mul(d).saturating_mul(pow - 1),
                )
            }
        },
    }
}

// ============================================================================
// Weighted lower bound
// ============================================================================

/// An exact lower bound on the weighted PSD throttling number
/// `th₊^ω(G) = min ω|S| + pt₊(G; S)`, derived from the growth bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBound {
    /// The bound itself: no forcing set can achieve a smaller objective.
    pub value: Rational,
    /// A start size minimizing `ω·s + floor(s)` (what the bound charges).
    pub optimal_size: u64,
}

impl WeightedBound {
    /// True when `value` respects the bound (`value ≥ self.value`),
    /// compared exactly.
    pub fn holds_for(&self, value: Rational) -> bool {
        value >= self.value
    }
}

/// Computes [`WeightedBound`] for a graph of order `n`, maximum degree
/// `delta`, and PSD zero forcing number at least `s0`: the exact minimum
/// over start sizes `s ≥ s0` of `ω·s + (growth floor on pt for size s)`.
///
/// Every term is exact rational/integer arithmetic; since the true optimum
/// pays `ω·s* + p*` with `s* ≥ s0` (no smaller set forces) and `p*` at
/// least the floor for `s*`, the reported minimum is a valid lower bound.
/// At `ω = 1` and `Δ ≥ 3` this equals [`lb_delta_ge3`]`(n, Δ, s0)`: the
/// floor drops by at most one per unit of size, so charging each extra
/// vertex a full unit makes `s = s0` optimal.
///
/// # Panics
/// Panics if `omega ≤ 0` or `s0` is not between 1 and `n`.
pub fn weighted_lb(n: u64, delta: u64, s0: u64, omega: Rational) -> WeightedBound {
    assert!(omega > Rational::zero(), "weight must be positive");
    assert!(1 <= s0 && s0 <= n, "s0 must be between 1 and n");
    let mut best: Option<WeightedBound> = None;
    for s in s0..=n {
        let charged = omega * Rational::from_integer(s as i64);
        if best.as_ref().is_some_and(|b| charged >= b.value) {
            break; // larger sizes only charge more
        }
        let Some(floor) = min_pt_for_size(Rule::Psd, n as usize, delta as usize, s as usize)
        else {
            continue;
        };
        let value = charged + Rational::from_integer(floor as i64);
        if best.as_ref().is_none_or(|b| value < b.value) {
            best = Some(WeightedBound {
                value,
                optimal_size: s,
            });
        }
    }
    // s = n is always feasible with floor 0, so the scan found something.
    best.expect("the full vertex set always forces")
}

// ============================================================================
// PSD throttling of paths and cycles
// ============================================================================

/// The snake decomposition `n = k²/2 + r`: `k` is the largest even number
/// with `k²/2 ≤ n`, and `r = n − k²/2` (so `0 ≤ r ≤ 2k + 1`).
pub fn snake_params(n: u64) -> (u64, u64) {
    let mut k = (2 * n as u128).isqrt() as u64;
    k -= k % 2;
    let r = n - k * k / 2;
    debug_assert!(r <= 2 * k + 1);
    (k, r)
}

/// `th₊(Pₙ)` for `n ≥ 1`, by the snake piecewise formula.
///
/// # Panics
/// Panics if `n = 0`.
pub fn thp_path(n: u64) -> u64 {
    assert!(n >= 1, "paths need at least one vertex");
    let (k, r) = snake_params(n);
    if r <= k / 2 {
        k
    } else if r <= 3 * k / 2 + 1 {
        k + 1
    } else {
        k + 2
    }
}

/// `th₊(Cₙ)` for `n ≥ 3`: the same piecewise value as [`thp_path`] for
/// `n ≥ 4`, and `3` for the triangle.
///
/// # Panics
/// Panics if `n < 3`.
pub fn thp_cycle(n: u64) -> u64 {
    assert!(n >= 3, "cycles need at least three vertices");
    if n == 3 {
        // A single blue vertex on C₃ has two neighbors in the one white
        // component and stalls, so the generic k/2-size construction fails;
        // any two vertices force the third in one round.
        3
    } else {
        thp_path(n)
    }
}

/// A start set attaining `th₊(Pₙ)` on the path `0..n` (path order), with
/// propagation time exactly `k/2`.
///
/// In 1-indexed path positions the base blues sit at `k/2 + 1 + j(k+1)`
/// for `j = 0, ..., k/2 − 1`, splitting the path into stretches a blue
/// vertex clears in `k/2` rounds; when `r > k/2` one extra blue at
/// `min(n, k²/2 + k + 1)` absorbs the remainder, and when
/// `r ≥ 3k/2 + 2` the last vertex joins too.
///
/// # Panics
/// Panics if `n = 0`.
pub fn witness_path(n: usize) -> VertexSet {
    assert!(n >= 1, "paths need at least one vertex");
    let (k64, r) = snake_params(n as u64);
    let k = k64 as usize;
    let mut set = VertexSet::empty(n);
    for j in 0..k / 2 {
        set.insert(k / 2 + j * (k + 1)); // 1-indexed k/2 + 1 + j(k+1)
    }
    if (r as usize) <= k / 2 {
        return set;
    }
    let q = n.min(k * k / 2 + k + 1); // 1-indexed
    set.insert(q - 1);
    if r as usize >= 3 * k / 2 + 2 {
        set.insert(n - 1);
    }
    set
}

/// A start set attaining `th₊(Cₙ)` on the cycle `0..n` (cyclic order),
/// with propagation time `k/2` (one round for the triangle).
///
/// In 1-indexed positions the blues sit at `1 + i(k+1)` for as long as
/// that stays on the cycle — `k/2`, `k/2 + 1`, or `k/2 + 2` vertices in
/// the three `r`-cases. The triangle gets `{0, 1}` instead.
///
/// # Panics
/// Panics if `n < 3`.
pub fn witness_cycle(n: usize) -> VertexSet {
    assert!(n >= 3, "cycles need at least three vertices");
    if n == 3 {
        return VertexSet::from_vertices(3, [0, 1]);
    }
    let (k, _) = snake_params(n as u64);
    let k = k as usize;
    let mut set = VertexSet::empty(n);
    let mut pos = 1usize; // 1-indexed
    while pos <= n {
        set.insert(pos - 1);
        pos += k + 1;
    }
    set
}

// ============================================================================
// Low-degree graphs and trees (PSD)
// ============================================================================

/// `th₊(G)` for graphs of maximum degree at most 1: `n` isolated vertices
/// when `delta = 0`, and `e + k + 1` for a perfect matching on `e` edges
/// plus `k` isolated vertices when `delta = 1` (all isolated vertices and
/// one endpoint per edge must start blue; the rest takes one round).
///
/// # Panics
/// Panics if `delta > 1`, if the isolated count is inconsistent with
/// `delta` (`delta = 0` forces `isolated = n`; `delta = 1` forces
/// `n − isolated` to be a positive even number).
pub fn thp_low_degree(delta: u64, n: u64, isolated: u64) -> u64 {
    match delta {
        0 => {
            assert!(isolated == n, "edgeless graphs have only isolated vertices");
            n
        }
        1 => {
            assert!(
                isolated < n && (n - isolated) % 2 == 0,
                "a graph with max degree 1 splits into edges and isolated vertices"
            );
            (n - isolated) / 2 + isolated + 1
        }
        _ => panic!("thp_low_degree requires delta <= 1, got {delta}"),
    }
}

/// Bounds on `th₊(T)` for a tree of diameter `diam`:
/// `(⌈√(2(diam+1)) − ½⌉, ⌈diam/2⌉ + 1)`.
///
/// The lower bound is the path bound applied to a longest path (an induced
/// subtree, and PSD throttling is monotone under induced subtrees); the
/// upper bound starts from a center vertex, which forces level by level.
pub fn tree_bounds(diam: u64) -> (u64, u64) {
    (lb_delta2(diam + 1), diam.div_ceil(2) + 1)
}

/// `th₊` of the full binary tree of height `h`: `h + 1`, attained by the
/// root alone (each level forces the next in one round).
pub fn thp_binary_tree(h: u32) -> u64 {
    u64::from(h) + 1
}

/// `th₊` of the regular tree `T(Δ, h)` of maximum degree `delta ≥ 3` and
/// radius `h` ([`crate::graph::generate::cayley_tree`]): `h + 1`, again
/// from the root. This family meets [`lb_delta_ge3`] with equality at
/// `s0 = 1`.
///
/// # Panics
/// Panics if `delta < 3`.
pub fn thp_tdh(delta: u64, h: u32) -> u64 {
    assert!(delta >= 3, "thp_tdh requires delta >= 3");
    u64::from(h) + 1
}

/// The order of the regular tree `T(Δ, h)` of maximum degree `delta ≥ 3`
/// and radius `h`: `(Δ(Δ-1)^h − 2)/(Δ-2)`.
///
/// # Panics
/// Panics if `delta < 3` or the order overflows `u64`.
pub fn tdh_order(delta: u64, h: u32) -> u64 {
    assert!(delta >= 3, "tdh_order requires delta >= 3");
    let d = delta as u128;
    let order = (d * (d - 1).pow(h) - 2) / (d - 2);
    u64::try_from(order).expect("order fits in u64")
}

// ============================================================================
// Standard throttling of paths and cycles
// ============================================================================

/// `th(Pₙ)` for `n ≥ 1`: `⌈2√n − 1⌉`, computed exactly as the least `t`
/// with `(t+1)² ≥ 4n`.
///
/// # Panics
/// Panics if `n = 0`.
pub fn th_std_path(n: u64) -> u64 {
    assert!(n >= 1, "paths need at least one vertex");
    ceil_sqrt(4 * n as u128) as u64 - 1
}

/// The square decomposition behind the cycle formula: `(m, r)` with
/// `m = ⌊√n⌋` and `r = n − m²` (so `0 ≤ r ≤ 2m`).
pub fn std_cycle_params(n: u64) -> (u64, u64) {
    let m = (n as u128).isqrt() as u64;
    (m, n - m * m)
}

/// `th(Cₙ)` for `n ≥ 3`, by the square piecewise formula. Exceeds
/// [`th_std_path`] exactly when `n` is an odd perfect square.
///
/// # Panics
/// Panics if `n < 3`.
pub fn th_std_cycle(n: u64) -> u64 {
    assert!(n >= 3, "cycles need at least three vertices");
    let (m, r) = std_cycle_params(n);
    if r == 0 {
        if m % 2 == 0 {
            2 * m - 1
        } else {
            2 * m
        }
    } else if r <= m {
        2 * m
    } else {
        2 * m + 1
    }
}

/// A start set attaining `th(Cₙ)` on the cycle `0..n` (cyclic order).
///
/// Cut the cycle into `rows` consecutive arcs of length `c` (the last arc
/// possibly shorter), boustrophedon-style: odd arcs take their last vertex
/// blue, even arcs their first, so consecutive arcs contribute *adjacent*
/// blue pairs whose chains sweep the two arcs in opposite directions and
/// finish simultaneously. The `(rows, c)` table per [`std_cycle_params`]:
///
/// ```text
/// r = 0, m even:  (m, m)          r = 0, m odd:  (m, m) plus vertex 0
/// 0 < r ≤ m:      (m, m+1) m even, (m+1, m) m odd
/// m < r ≤ 2m:     (m, m+2) m even, (m+1, m+1) m odd
/// ```
///
/// The parity choices make the (possibly short) last arc an even arc, so
/// every odd arc is full and the sweep timings match.
///
/// # Panics
/// Panics if `n < 3`.
pub fn witness_std_cycle(n: usize) -> VertexSet {
    assert!(n >= 3, "cycles need at least three vertices");
    let (m64, r64) = std_cycle_params(n as u64);
    let (m, r) = (m64 as usize, r64 as usize);
    let (rows, c, extra) = if r == 0 {
        (m, m, m % 2 == 1)
    } else if r <= m {
        if m % 2 == 0 {
            (m, m + 1, false)
        } else {
            (m + 1, m, false)
        }
    } else if m % 2 == 0 {
        (m, m + 2, false)
    } else {
        (m + 1, m + 1, false)
    };
    let mut set = VertexSet::empty(n);
    for j in 1..=rows {
        let pos = if j % 2 == 1 { j * c } else { (j - 1) * c + 1 }; // 1-indexed
        debug_assert!(pos <= n, "arc {j} fell off the cycle");
        set.insert(pos - 1);
    }
    if extra {
        set.insert(0);
    }
    set
}

// ============================================================================
// Tests
// ============================================================================
