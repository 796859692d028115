//! Exact (weighted) throttling by exhaustive, pruned subset search.
//!
//! The weighted throttling value of a start set is `ω·|S| + pt(G; S)`; the
//! graph's weighted throttling number is the minimum over all forcing sets
//! `S`. With `ω = 1` this is the ordinary throttling number `th(G)` or
//! `th₊(G)` depending on the rule.
//!
//! [`throttle_exact`] scans start sets by size (ascending) and within each
//! size in lexicographic order, so it can certify the canonical optimum:
//! among optimal sets it returns the one of smallest size, and among those
//! the lexicographically least. Three sound prunes keep the scan fast
//! without disturbing that choice:
//!
//! * a per-size floor on achievable propagation time (from the degree
//!   growth bounds) skips entire sizes;
//! * the BFS distance from `S` to its complement is a lower bound on
//!   `pt(G; S)`, letting hopeless sets skip propagation entirely;
//! * propagation aborts once the round count alone makes the set worse
//!   than the incumbent.
//!
//! The subset scan is parallelized over a *fixed* number of contiguous
//! rank ranges, each reduced in order afterwards, so results (value and
//! witness) are identical regardless of thread count. A shared atomic
//! incumbent only ever prunes candidates that are *strictly* worse than a
//! value some chunk has already achieved, which cannot change any chunk's
//! reported winner.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use num::{One, Zero};
use rayon::prelude::*;

use crate::combi;
use crate::error::SolverError;
use crate::forcing::{propagation_time, propagation_time_capped, Rule};
use crate::formulas::min_pt_for_size;
use crate::graph::{Graph, Steps, VertexSet};
use crate::Rational;

// ============================================================================
// Objective, budget, results
// ============================================================================

/// A validated throttling objective: minimize `ω·|S| + pt(G; S)` for a
/// positive rational weight `ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Objective {
    omega: Rational,
}

impl Objective {
    /// The ordinary throttling objective, `ω = 1`.
    pub fn unweighted() -> Objective {
        Objective {
            omega: Rational::one(),
        }
    }

    /// A weighted objective.
    ///
    /// # Errors
    /// Fails unless `omega > 0`.
    pub fn weighted(omega: Rational) -> Result<Objective, SolverError> {
        if omega <= Rational::zero() {
            return Err(SolverError::NonPositiveWeight {
                omega: omega.to_string(),
            });
        }
        Ok(Objective { omega })
    }

    /// The weight ω.
    pub fn omega(&self) -> Rational {
        self.omega
    }

    /// The reduced weight as `(numerator, denominator)`, both positive.
    fn parts(&self) -> (u64, u64) {
        (*self.omega.numer() as u64, *self.omega.denom() as u64)
    }

    /// The objective value of a start set of size `size` with finite
    /// propagation time `pt`.
    pub fn value(&self, size: usize, pt: u32) -> Rational {
        self.omega * Rational::from_integer(size as i64) + Rational::from_integer(i64::from(pt))
    }
}

/// Resource limits for [`throttle_exact`].
///
/// `max_order` rejects graphs whose subset lattice is out of reach before
/// any work happens. `max_subsets` and `time_limit` stop a running search
/// early; a stopped search still reports the best set found so far, marked
/// `proven_optimal: false`. Unlimited searches are fully deterministic;
/// early-stopped ones may vary in *how far* they got, never in soundness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest graph order accepted (default 20).
    pub max_order: usize,
    /// Stop after examining this many candidate sets.
    pub max_subsets: Option<u64>,
    /// Stop after this much wall-clock time.
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget {
            max_order: 20,
            max_subsets: None,
            time_limit: None,
        }
    }
}

impl SearchBudget {
    /// A default budget with a different order cap.
    pub fn with_max_order(max_order: usize) -> SearchBudget {
        SearchBudget {
            max_order,
            ..SearchBudget::default()
        }
    }
}

/// The objective value of one start set: finite for forcing sets, infinite
/// otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ThrottleValue {
    Finite(Rational),
    Infinite,
}

impl std::fmt::Display for ThrottleValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ThrottleValue::Finite(r) => write!(f, "{r}"),
            ThrottleValue::Infinite => write!(f, "infinity"),
        }
    }
}

/// The result of an exact throttling search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThrottleResult {
    /// The rule the search ran under.
    pub rule: Rule,
    /// The weight ω.
    pub omega: Rational,
    /// The best objective value found: `ω·size + pt`.
    pub value: Rational,
    /// The witness attaining `value`: of all optimal sets, the smallest,
    /// and of those the lexicographically least.
    pub witness: VertexSet,
    /// `pt(G; witness)`.
    pub pt: u32,
    /// `|witness|`.
    pub size: usize,
    /// True when the search exhausted every candidate it could not soundly
    /// prune; false when a budget limit stopped it early.
    pub proven_optimal: bool,
    /// Number of candidate sets examined.
    pub subsets_examined: u64,
}

/// The best propagation time among start sets of one fixed size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestForSize {
    /// `min { pt(G; S) : |S| = size }`, infinite when no such set forces.
    pub pt: Steps,
    /// The lexicographically least set attaining `pt`, when finite.
    pub witness: Option<VertexSet>,
}

// ============================================================================
// Set-level value
// ============================================================================

/// The objective value `ω·|S| + pt(G; S)` of one start set.
pub fn throttle_of_set(
    rule: Rule,
    g: &Graph,
    start: &VertexSet,
    objective: Objective,
) -> ThrottleValue {
    match propagation_time(rule, g, start) {
        Steps::Finite(p) => ThrottleValue::Finite(objective.value(start.len(), p)),
        Steps::Infinite => ThrottleValue::Infinite,
    }
}

// ============================================================================
// Exact search
// ============================================================================

/// Number of contiguous rank ranges each size's subset scan is split into.
/// Fixed (not thread-dependent) so the reduction order, and therefore the
/// reported witness, never depends on parallelism.
const CHUNKS: u64 = 256;

/// Computes the weighted throttling number `min ω·|S| + pt(G; S)` exactly,
/// with the canonical witness (smallest optimal set, lexicographically
/// least among those).
///
/// # Errors
/// [`SolverError::GraphTooLarge`] when the graph exceeds
/// `budget.max_order`; [`SolverError::BudgetExhausted`] when a subset or
/// time limit stopped the search before *any* forcing set was found. A
/// budget that stops the search after a forcing set was found yields
/// `Ok` with `proven_optimal: false`.
pub fn throttle_exact(
    rule: Rule,
    g: &Graph,
    objective: Objective,
    budget: &SearchBudget,
) -> Result<ThrottleResult, SolverError> {
    let n = g.order();
    if n > budget.max_order {
        return Err(SolverError::GraphTooLarge {
            n,
            max_order: budget.max_order,
        });
    }
    let (a, b) = objective.parts();
    let delta = g.max_degree();
    let started = Instant::now();
    let examined = AtomicU64::new(0);
    let aborted = AtomicBool::new(false);
    // Best candidate so far as (numerator, size, pt, witness); comparing
    // numerators a·size + b·pt is exact since the denominator b is fixed.
    let mut best: Option<(u64, usize, u32, VertexSet)> = None;

    for s in 0..=n {
        if aborted.load(Ordering::Relaxed) {
            break;
        }
        let size_start_num = best.as_ref().map_or(u64::MAX, |b| b.0);
        let base = a.saturating_mul(s as u64);
        if base >= size_start_num {
            // ω·s alone matches or beats the incumbent; every later size is
            // worse still, and ties go to the smaller incumbent.
            break;
        }
        let Some(floor_pt) = min_pt_for_size(rule, n, delta, s) else {
            continue;
        };
        if base.saturating_add(b.saturating_mul(floor_pt)) >= size_start_num {
            continue;
        }

        let total = combi::count(n, s);
        let chunks = CHUNKS.min(total).max(1);
        let live = AtomicU64::new(size_start_num);

        let results: Vec<Option<(u64, u32, VertexSet)>> = (0..chunks)
            .into_par_iter()
            .map(|chunk| {
                let lo = ((total as u128 * chunk as u128) / chunks as u128) as u64;
                let hi = ((total as u128 * (chunk as u128 + 1)) / chunks as u128) as u64;
                if lo >= hi {
                    return None;
                }
                let mut idx = combi::unrank(n, s, lo);
                let mut local: Option<(u64, u32, VertexSet)> = None;
                for rank in lo..hi {
                    if aborted.load(Ordering::Relaxed) {
                        break;
                    }
                    let seen = examined.fetch_add(1, Ordering::Relaxed);
                    if budget.max_subsets.is_some_and(|cap| seen >= cap) {
                        aborted.store(true, Ordering::Relaxed);
                        break;
                    }
                    if (rank - lo) & 0x1ff == 0 {
                        if budget
                            .time_limit
                            .is_some_and(|limit| started.elapsed() > limit)
                        {
                            aborted.store(true, Ordering::Relaxed);
                            break;
                        }
                    }

                    'candidate: {
                        let set = VertexSet::from_vertices(n, idx.iter().copied());
                        let dist = match g.dist_set_to_complement(&set) {
                            Steps::Infinite => break 'candidate,
                            Steps::Finite(d) => u64::from(d),
                        };
                        let local_num = local.as_ref().map_or(u64::MAX, |l| l.0);
                        let live_now = live.load(Ordering::Relaxed);
                        let bound = base.saturating_add(b.saturating_mul(dist));
                        // A candidate tying the smaller-size incumbent loses
                        // outright (≥); one strictly above a value some chunk
                        // already achieved can never be reported (>).
                        if bound >= size_start_num || bound > live_now {
                            break 'candidate;
                        }
                        // Largest useful numerator: strictly below the
                        // incumbent and this chunk's own best (within-chunk
                        // ties keep the earlier, lexicographically smaller
                        // set), but *matching* another chunk's value is
                        // still useful — the reduce prefers earlier chunks.
                        let lim = (size_start_num - 1)
                            .min(live_now)
                            .min(local_num.saturating_sub(1));
                        if lim < base {
                            break 'candidate;
                        }
                        let p_cap = (((lim - base) / b).min(n as u64)) as u32;
                        if let Some(Steps::Finite(p)) =
                            propagation_time_capped(rule, g, &set, p_cap)
                        {
                            let num = base + b * u64::from(p);
                            if num < local_num {
                                local = Some((num, p, set));
                                live.fetch_min(num, Ordering::Relaxed);
                            }
                        }
                    }

                    if rank + 1 < hi {
                        let advanced = combi::next_combination(&mut idx, n);
                        debug_assert!(advanced);
                    }
                }
                local
            })
            .collect();

        // Reduce in chunk (= lexicographic) order: strict improvement only,
        // so earlier chunks win ties.
        for (num, p, set) in results.into_iter().flatten() {
            if num < best.as_ref().map_or(u64::MAX, |b| b.0) {
                best = Some((num, s, p, set));
            }
        }
    }

    let proven_optimal = !aborted.load(Ordering::Relaxed);
    let subsets_examined = examined.load(Ordering::Relaxed);
    match best {
        Some((_, size, pt, witness)) => {
            debug_assert_eq!(propagation_time(rule, g, &witness), Steps::Finite(pt));
            Ok(ThrottleResult {
                rule,
                omega: objective.omega(),
                value: objective.value(size, pt),
                witness,
                pt,
                size,
                proven_optimal,
                subsets_examined,
            })
        }
        None => Err(SolverError::BudgetExhausted { subsets_examined }),
    }
}

/// The minimum propagation time over start sets of exactly `size`
/// vertices, with the lexicographically least witness. Serial scan of
/// `C(n, size)` candidates.
///
/// # Panics
/// Panics if `size > g.order()`.
pub fn best_for_size(rule: Rule, g: &Graph, size: usize) -> BestForSize {
    let n = g.order();
    assert!(size <= n, "size {size} exceeds graph order {n}");
    let mut best: Option<(u32, VertexSet)> = None;
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        'candidate: {
            let set = VertexSet::from_vertices(n, idx.iter().copied());
            let dist = match g.dist_set_to_complement(&set) {
                Steps::Infinite => break 'candidate,
                Steps::Finite(d) => d,
            };
            if let Some((bp, _)) = &best {
                if dist >= *bp {
                    break 'candidate;
                }
            }
            let cap = best.as_ref().map_or(n as u32, |(bp, _)| bp - 1);
            if let Some(Steps::Finite(p)) = propagation_time_capped(rule, g, &set, cap) {
                debug_assert!(best.as_ref().is_none_or(|(bp, _)| p < *bp));
                best = Some((p, set));
            }
        }
        if !combi::next_combination(&mut idx, n) {
            break;
        }
    }
    match best {
        Some((p, set)) => BestForSize {
            pt: Steps::Finite(p),
            witness: Some(set),
        },
        None => BestForSize {
            pt: Steps::Infinite,
            witness: None,
        },
    }
}

// ============================================================================
// Tests
// ============================================================================
