//! `forcelab verify` — named claim suites: closed forms against exact
//! search, witness certification, census agreement, and sampled
//! inequalities. One PASS/FAIL line per claim; exit 1 if any claim fails.

use std::path::Path;

use forcelab_core::classifier::{classify, ExtremeClass};
use forcelab_core::forcing::propagation_time;
use forcelab_core::formulas::{
    growth_constraint_holds, lb_delta2, lb_delta2_weighted, lb_delta_ge3, th_std_cycle, thp_cycle,
    thp_path, weighted_degree_two_bound_holds, weighted_lb, witness_cycle, witness_path,
    witness_std_cycle,
};
use forcelab_core::graph::{generate, graph6};
use forcelab_core::throttle::{throttle_exact, throttle_of_set, Objective, ThrottleValue};
use forcelab_core::{Graph, Rational, Rule, SearchBudget, Steps, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::set_str;
use crate::{CliError, CliResult, SuiteArg, VerifyArgs};

struct Suite {
    name: &'static str,
    passed: usize,
    failed: usize,
}

impl Suite {
    fn new(name: &'static str) -> Suite {
        Suite {
            name,
            passed: 0,
            failed: 0,
        }
    }

    fn claim(&mut self, name: &str, outcome: Result<(), String>) {
        match outcome {
            Ok(()) => {
                self.passed += 1;
                println!("PASS {name}");
            }
            Err(detail) => {
                self.failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }

    fn finish(self) -> CliResult {
        println!(
            "suite {}: {} passed, {} failed",
            self.name, self.passed, self.failed
        );
        if self.failed > 0 {
            Err(CliError::Verification(format!(
                "suite {} failed {} claim(s)",
                self.name, self.failed
            )))
        } else {
            Ok(())
        }
    }
}

pub fn run(args: &VerifyArgs) -> CliResult {
    let name = match args.suite {
        SuiteArg::Paths => "paths",
        SuiteArg::Cycles => "cycles",
        SuiteArg::Stdcycles => "stdcycles",
        SuiteArg::Trees => "trees",
        SuiteArg::Census => "census",
        SuiteArg::Weighted => "weighted",
        SuiteArg::Lemma => "lemma",
    };
    let mut suite = Suite::new(name);
    match args.suite {
        SuiteArg::Paths => paths(&mut suite),
        SuiteArg::Cycles => cycles(&mut suite),
        SuiteArg::Stdcycles => stdcycles(&mut suite),
        SuiteArg::Trees => trees(&mut suite),
        SuiteArg::Census => census(
            &mut suite,
            args.corpus.as_deref().expect("clap requires --corpus"),
        )?,
        SuiteArg::Weighted => weighted(&mut suite),
        SuiteArg::Lemma => lemma(&mut suite),
    }
    suite.finish()
}

/// Exact search with no budget beyond the order itself.
fn search(rule: Rule, g: &Graph, objective: Objective) -> Rational {
    let budget = SearchBudget::with_max_order(g.order());
    let res = throttle_exact(rule, g, objective, &budget).expect("unbudgeted search succeeds");
    assert!(res.proven_optimal);
    res.value
}

fn rat(x: u64) -> Rational {
    Rational::from_integer(x as i64)
}

/// `first_counterexample(iter, test)`: `Ok` when `test` holds everywhere,
/// or the first failing case's description.
fn all_of<I, T, F>(cases: I, mut test: F) -> Result<(), String>
where
    I: IntoIterator<Item = T>,
    F: FnMut(T) -> Result<(), String>,
{
    for case in cases {
        test(case)?;
    }
    Ok(())
}

// ============================================================================
// paths / cycles / stdcycles
// ============================================================================

fn paths(suite: &mut Suite) {
    suite.claim(
        "path throttling matches the closed form (search, n = 1..20)",
        all_of(1..=20u64, |n| {
            let got = search(Rule::Psd, &generate::path(n as usize), Objective::unweighted());
            let want = rat(thp_path(n));
            if got == want {
                Ok(())
            } else {
                Err(format!("n = {n}: search found {got}, formula says {want}"))
            }
        }),
    );
    suite.claim(
        "path throttling certified by bound and witness (n = 21..60)",
        all_of(21..=60u64, |n| {
            let formula = thp_path(n);
            if lb_delta2(n) != formula {
                return Err(format!(
                    "n = {n}: lower bound {} does not meet the formula {formula}",
                    lb_delta2(n)
                ));
            }
            let g = generate::path(n as usize);
            let w = witness_path(n as usize);
            match throttle_of_set(Rule::Psd, &g, &w, Objective::unweighted()) {
                ThrottleValue::Finite(v) if v == rat(formula) => Ok(()),
                other => Err(format!("n = {n}: witness value {other}, formula {formula}")),
            }
        }),
    );
}

fn cycles(suite: &mut Suite) {
    suite.claim(
        "triangle throttling is 3 (search)",
        (search(Rule::Psd, &generate::cycle(3), Objective::unweighted()) == rat(3)
            && thp_cycle(3) == 3)
            .then_some(())
            .ok_or_else(|| "C3 should cost 3".to_string()),
    );
    suite.claim(
        "cycle throttling matches the closed form (search, n = 4..18)",
        all_of(4..=18u64, |n| {
            let got = search(Rule::Psd, &generate::cycle(n as usize), Objective::unweighted());
            let want = rat(thp_cycle(n));
            if got == want {
                Ok(())
            } else {
                Err(format!("n = {n}: search found {got}, formula says {want}"))
            }
        }),
    );
    suite.claim(
        "cycle throttling certified by bound and witness (n = 19..60)",
        all_of(19..=60u64, |n| {
            let formula = thp_cycle(n);
            if lb_delta2(n) != formula {
                return Err(format!(
                    "n = {n}: lower bound {} does not meet the formula {formula}",
                    lb_delta2(n)
                ));
            }
            let g = generate::cycle(n as usize);
            let w = witness_cycle(n as usize);
            match throttle_of_set(Rule::Psd, &g, &w, Objective::unweighted()) {
                ThrottleValue::Finite(v) if v == rat(formula) => Ok(()),
                other => Err(format!("n = {n}: witness value {other}, formula {formula}")),
            }
        }),
    );
}

fn stdcycles(suite: &mut Suite) {
    suite.claim(
        "standard cycle throttling matches the closed form (search, n = 3..16)",
        all_of(3..=16u64, |n| {
            let got = search(
                Rule::Standard,
                &generate::cycle(n as usize),
                Objective::unweighted(),
            );
            let want = rat(th_std_cycle(n));
            if got == want {
                Ok(())
            } else {
                Err(format!("n = {n}: search found {got}, formula says {want}"))
            }
        }),
    );
    suite.claim(
        "published spot values hold (n = 8, 9, 16)",
        all_of([(8u64, 5u64), (9, 6), (16, 7)], |(n, expect)| {
            if th_std_cycle(n) != expect {
                return Err(format!(
                    "th(C{n}) formula gives {}, published value {expect}",
                    th_std_cycle(n)
                ));
            }
            let got = search(
                Rule::Standard,
                &generate::cycle(n as usize),
                Objective::unweighted(),
            );
            if got == rat(expect) {
                Ok(())
            } else {
                Err(format!("th(C{n}) search gives {got}, published {expect}"))
            }
        }),
    );
    suite.claim(
        "standard cycle witnesses attain the closed form (n = 3..60)",
        all_of(3..=60u64, |n| {
            let g = generate::cycle(n as usize);
            let w = witness_std_cycle(n as usize);
            let formula = th_std_cycle(n);
            match throttle_of_set(Rule::Standard, &g, &w, Objective::unweighted()) {
                ThrottleValue::Finite(v) if v == rat(formula) => Ok(()),
                other => Err(format!("n = {n}: witness value {other}, formula {formula}")),
            }
        }),
    );
}

// ============================================================================
// trees
// ============================================================================

/// A uniform random recursive tree: vertex `v` attaches to a uniform
/// earlier vertex.
fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("within cap");
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).expect("tree edges are simple");
    }
    g
}

/// A random connected induced subgraph of `g` (which must be connected):
/// grow from a random root along random frontier vertices.
fn random_connected_subset(rng: &mut ChaCha8Rng, g: &Graph, size: usize) -> VertexSet {
    let n = g.order();
    let mut chosen = VertexSet::empty(n);
    let mut frontier: Vec<usize> = vec![rng.gen_range(0..n)];
    while chosen.len() < size {
        let pick = rng.gen_range(0..frontier.len());
        let v = frontier.swap_remove(pick);
        if !chosen.insert(v) {
            continue;
        }
        for w in g.neighbors(v).iter() {
            if !chosen.contains(w) {
                frontier.push(w);
            }
        }
    }
    chosen
}

fn trees(suite: &mut Suite) {
    suite.claim(
        "binary tree throttling is h + 1 (search, h = 1..3)",
        all_of(1..=3u32, |h| {
            let g = generate::full_binary_tree(h);
            let got = search(Rule::Psd, &g, Objective::unweighted());
            if got == rat(u64::from(h) + 1) {
                Ok(())
            } else {
                Err(format!("h = {h}: search found {got}, expected {}", h + 1))
            }
        }),
    );
    suite.claim(
        "regular tree T(3, 2) attains the degree-3 lower bound",
        {
            let g = generate::cayley_tree(3, 2);
            let got = search(Rule::Psd, &g, Objective::unweighted());
            let bound = lb_delta_ge3(10, 3, 1);
            if got == rat(3) && bound == 3 {
                Ok(())
            } else {
                Err(format!("search {got}, bound {bound}, expected 3"))
            }
        },
    );
    suite.claim(
        "throttling is monotone under subtrees (50 random trees, n <= 10)",
        {
            let mut rng = ChaCha8Rng::seed_from_u64(0x7265657321);
            all_of(0..50, |i| {
                let n = rng.gen_range(2..=10);
                let tree = random_tree(&mut rng, n);
                let size = rng.gen_range(1..=n);
                let keep = random_connected_subset(&mut rng, &tree, size);
                let (sub, _) = tree.induced(&keep);
                for rule in [Rule::Psd, Rule::Standard] {
                    let whole = search(rule, &tree, Objective::unweighted());
                    let part = search(rule, &sub, Objective::unweighted());
                    if part > whole {
                        return Err(format!(
                            "sample {i}: a {}-vertex subtree costs {part}, the {n}-vertex tree {whole} ({rule:?})",
                            sub.order()
                        ));
                    }
                }
                Ok(())
            })
        },
    );
}

// ============================================================================
// census
// ============================================================================

fn census(suite: &mut Suite, corpus: &Path) -> Result<(), CliError> {
    let text = std::fs::read_to_string(corpus)
        .map_err(|e| CliError::input(format!("failed to read {}: {e}", corpus.display())))?;
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = graph6::parse(line)
            .map_err(|e| CliError::input(format!("corpus line {}: {e}", i + 1)))?;
        graphs.push(g);
    }

    suite.claim(
        "corpus holds every connected graph on 1..=7 vertices (996 classes)",
        {
            let mut counts = [0usize; 8];
            let mut problem = None;
            for g in &graphs {
                if !g.is_connected() {
                    problem = Some("a disconnected graph appears in the corpus".to_string());
                    break;
                }
                if g.order() > 7 {
                    problem = Some(format!("an order-{} graph appears in the corpus", g.order()));
                    break;
                }
                counts[g.order()] += 1;
            }
            match problem {
                Some(p) => Err(p),
                None if counts[1..=7] == [1, 1, 2, 6, 21, 112, 853] => Ok(()),
                None => Err(format!(
                    "per-order counts {:?} instead of [1, 1, 2, 6, 21, 112, 853]",
                    &counts[1..=7]
                )),
            }
        },
    );

    // Solve and classify once, then compare verdict by verdict.
    let solved: Vec<(usize, Rational, forcelab_core::Classification)> = graphs
        .iter()
        .map(|g| {
            (
                g.order(),
                search(Rule::Psd, g, Objective::unweighted()),
                classify(g),
            )
        })
        .collect();
    type Verdict = fn(usize, Rational, &forcelab_core::Classification) -> (bool, bool);
    let verdicts: [(&str, Verdict); 5] = [
        (
            "the thp = 1 verdict agrees with exact search on the corpus",
            |_, v, c| (c.has(ExtremeClass::ThpOne), v == rat(1)),
        ),
        (
            "the thp = 2 verdict agrees with exact search on the corpus",
            |_, v, c| (c.has(ExtremeClass::ThpTwo), v == rat(2)),
        ),
        (
            "the thp = 3 verdict agrees with exact search on the corpus",
            |_, v, c| (c.has(ExtremeClass::ThpThree), v == rat(3)),
        ),
        (
            "the thp = n verdict agrees with exact search on the corpus",
            |n, v, c| (c.has(ExtremeClass::ThpEqualsN), v == rat(n as u64)),
        ),
        (
            "the thp >= n - 1 verdict agrees with exact search on the corpus",
            |n, v, c| {
                (
                    c.has(ExtremeClass::ThpAtLeastNminus1),
                    v >= rat(n.saturating_sub(1) as u64),
                )
            },
        ),
    ];
    for (name, check) in verdicts {
        suite.claim(
            name,
            all_of(graphs.iter().zip(&solved), |(g, (n, value, cls))| {
                let (claimed, actual) = check(*n, *value, cls);
                if claimed == actual {
                    Ok(())
                } else {
                    Err(format!(
                        "{}: classifier says {claimed}, search value {value} says {actual}",
                        graph6::encode(g)
                    ))
                }
            }),
        );
    }
    Ok(())
}

// ============================================================================
// weighted
// ============================================================================

/// Checks a weighted throttling value of a `Δ ≤ 2` graph against the
/// degree-2 lower bound: the ceiling form `⌈√(2ωn) − ½⌉` when the weight
/// is an integer (the objective is then integer-valued, so rounding up is
/// sound), and the continuous form `value ≥ √(2ωn) − ½` otherwise — for
/// fractional weights the optimum can fall strictly below the ceiling
/// (`C₃` at `ω = ½` costs `3/2`, not `2`).
fn degree_two_check(n: u64, omega: Rational, got: Rational) -> Result<(), String> {
    if omega.is_integer() {
        let bound = rat(lb_delta2_weighted(n, omega));
        if got < bound {
            return Err(format!("n = {n}, omega = {omega}: value {got} < bound {bound}"));
        }
    } else if !weighted_degree_two_bound_holds(n, omega, got) {
        return Err(format!(
            "n = {n}, omega = {omega}: value {got} falls below sqrt(2*omega*n) - 1/2"
        ));
    }
    Ok(())
}

fn weighted(suite: &mut Suite) {
    let omegas = [
        Rational::new(1, 2),
        Rational::new(1, 1),
        Rational::new(2, 1),
        Rational::new(3, 1),
    ];
    suite.claim(
        "weighted path throttling respects the degree-2 bound (n = 1..14)",
        all_of(1..=14u64, |n| {
            for &omega in &omegas {
                let got = search(
                    Rule::Psd,
                    &generate::path(n as usize),
                    Objective::weighted(omega).expect("positive"),
                );
                degree_two_check(n, omega, got)?;
            }
            Ok(())
        }),
    );
    suite.claim(
        "weighted cycle throttling respects the degree-2 bound (n = 3..14)",
        all_of(3..=14u64, |n| {
            for &omega in &omegas {
                let got = search(
                    Rule::Psd,
                    &generate::cycle(n as usize),
                    Objective::weighted(omega).expect("positive"),
                );
                degree_two_check(n, omega, got)?;
            }
            Ok(())
        }),
    );
    suite.claim(
        "the regular tree T(3, 2) respects the weighted bound (omega = 1, 2)",
        all_of([Rational::new(1, 1), Rational::new(2, 1)], |omega| {
            let g = generate::cayley_tree(3, 2);
            let got = search(Rule::Psd, &g, Objective::weighted(omega).expect("positive"));
            let bound = weighted_lb(10, 3, 1, omega).value;
            if got >= bound {
                Ok(())
            } else {
                Err(format!("omega = {omega}: value {got} < bound {bound}"))
            }
        }),
    );
    suite.claim("the doubled-weight path P4 costs exactly 4", {
        let got = search(
            Rule::Psd,
            &generate::path(4),
            Objective::weighted(rat(2)).expect("positive"),
        );
        if got == rat(4) {
            Ok(())
        } else {
            Err(format!("search found {got}, expected 4"))
        }
    });
}

// ============================================================================
// lemma
// ============================================================================

fn lemma(suite: &mut Suite) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6c656d6d61);
    let mut samples = Vec::new();
    for _ in 0..2000 {
        let n = rng.gen_range(1..=10usize);
        let p = [0.2, 0.5, 0.8][rng.gen_range(0..3)];
        let mut g = Graph::empty(n).expect("within cap");
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).expect("simple");
                }
            }
        }
        let mut s = VertexSet::empty(n);
        for v in 0..n {
            if rng.gen_bool(0.5) {
                s.insert(v);
            }
        }
        samples.push((g, s));
    }

    suite.claim(
        "the growth inequality holds on 2000 random (graph, set) pairs",
        all_of(samples.iter(), |(g, s)| {
            for rule in [Rule::Psd, Rule::Standard] {
                if let Steps::Finite(p) = propagation_time(rule, g, s) {
                    let ok = growth_constraint_holds(
                        rule,
                        g.order() as u64,
                        g.max_degree() as u64,
                        s.len() as u64,
                        u64::from(p),
                    );
                    if !ok {
                        return Err(format!(
                            "{} with set [{}]: pt {p} beats the growth bound ({rule:?})",
                            graph6::encode(g),
                            set_str(s)
                        ));
                    }
                }
            }
            Ok(())
        }),
    );
    suite.claim(
        "blue-to-white distance never exceeds propagation time (same pairs)",
        all_of(samples.iter(), |(g, s)| {
            for rule in [Rule::Psd, Rule::Standard] {
                let pt = propagation_time(rule, g, s);
                if pt.is_finite() && g.dist_set_to_complement(s) > pt {
                    return Err(format!(
                        "{} with set [{}]: distance exceeds pt {pt:?} ({rule:?})",
                        graph6::encode(g),
                        set_str(s)
                    ));
                }
            }
            Ok(())
        }),
    );
}
