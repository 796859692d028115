//! Cross-cutting invariants checked by exhaustive or large deterministic
//! sweeps: the pruned solver against an unpruned oracle, witness
//! constructions at orders far beyond search range, tree bounds over the
//! full tree census, and the weighted objective's monotonicity laws.

use forcelab_core::census;
use forcelab_core::forcing::{graph_propagation_time, propagation_time, zero_forcing_number};
use forcelab_core::formulas::{
    snake_params, std_cycle_params, th_std_cycle, thp_cycle, thp_path, tree_bounds, witness_cycle,
    witness_path, witness_std_cycle,
};
use forcelab_core::graph::generate;
use forcelab_core::throttle::{throttle_exact, throttle_of_set, Objective};
use forcelab_core::{Graph, Rational, Rule, SearchBudget, Steps, ThrottleValue, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rat(x: u64) -> Rational {
    Rational::from_integer(x as i64)
}

fn exact(rule: Rule, g: &Graph, objective: Objective) -> Rational {
    let res = throttle_exact(rule, g, objective, &SearchBudget::with_max_order(g.order()))
        .expect("within budget");
    assert!(res.proven_optimal);
    res.value
}

/// Unpruned reference: evaluate every one of the `2^n` start sets.
fn oracle(rule: Rule, g: &Graph, objective: Objective) -> Rational {
    let n = g.order();
    let mut best: Option<Rational> = None;
    for mask in 0u64..(1 << n) {
        let s = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        if let Steps::Finite(p) = propagation_time(rule, g, &s) {
            let v = objective.value(s.len(), p);
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    best.expect("the full vertex set forces")
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("simple edges")
}

#[test]
fn pruned_solver_matches_the_unpruned_oracle() {
    let objectives = [
        Objective::unweighted(),
        Objective::weighted(Rational::new(2, 3)).expect("positive"),
        Objective::weighted(Rational::new(3, 1)).expect("positive"),
    ];
    // Every isomorphism class up to five vertices, under both rules and
    // three weights.
    for n in 1..=5 {
        for g in census::all_graphs(n) {
            for rule in [Rule::Psd, Rule::Standard] {
                for objective in objectives {
                    assert_eq!(
                        exact(rule, &g, objective),
                        oracle(rule, &g, objective),
                        "order {n}, {rule:?}, omega {}",
                        objective.omega()
                    );
                }
            }
        }
    }
    // Larger random graphs, unweighted and fractional.
    let mut rng = ChaCha8Rng::seed_from_u64(0x6f7261636c65);
    for trial in 0..60 {
        let n = rng.gen_range(6..=8);
        let g = random_graph(&mut rng, n, [0.25, 0.5, 0.75][trial % 3]);
        for rule in [Rule::Psd, Rule::Standard] {
            for objective in [objectives[0], objectives[1]] {
                assert_eq!(
                    exact(rule, &g, objective),
                    oracle(rule, &g, objective),
                    "trial {trial}, {rule:?}"
                );
            }
        }
    }
}

#[test]
fn witness_constructions_attain_the_formulas_far_beyond_search_range() {
    for n in 1..=400u64 {
        let w = witness_path(n as usize);
        let got = throttle_of_set(Rule::Psd, &generate::path(n as usize), &w, Objective::unweighted());
        assert_eq!(got, ThrottleValue::Finite(rat(thp_path(n))), "path witness n = {n}");
    }
    for n in 3..=400u64 {
        let w = witness_cycle(n as usize);
        let got = throttle_of_set(Rule::Psd, &generate::cycle(n as usize), &w, Objective::unweighted());
        assert_eq!(got, ThrottleValue::Finite(rat(thp_cycle(n))), "cycle witness n = {n}");
    }
    for n in 3..=400u64 {
        let w = witness_std_cycle(n as usize);
        let got = throttle_of_set(
            Rule::Standard,
            &generate::cycle(n as usize),
            &w,
            Objective::unweighted(),
        );
        assert_eq!(
            got,
            ThrottleValue::Finite(rat(th_std_cycle(n))),
            "standard cycle witness n = {n}"
        );
    }
}

#[test]
fn decomposition_parameters_stay_in_range() {
    for n in 1..=100_000u64 {
        let (k, r) = snake_params(n);
        assert_eq!(k % 2, 0, "k parity at n = {n}");
        assert!(k * k / 2 <= n && r == n - k * k / 2, "snake split at n = {n}");
        assert!(r < 2 * k + 2, "snake remainder at n = {n}");
        let (m, rs) = std_cycle_params(n);
        assert!(m * m <= n && rs == n - m * m, "square split at n = {n}");
        assert!(rs <= 2 * m, "square remainder at n = {n}");
    }
}

#[test]
fn every_small_tree_respects_the_diameter_bounds() {
    let mut seen = 0;
    for n in 1..=9usize {
        for t in census::all_trees(n) {
            // Positive semidefinite forcing solves trees from any single
            // vertex: white components shrink leaf-ward.
            assert_eq!(zero_forcing_number(Rule::Psd, &t).number, 1, "tree order {n}");
            let diam = match t.metrics().diameter {
                Steps::Finite(d) => u64::from(d),
                Steps::Infinite => panic!("trees are connected"),
            };
            let (lo, hi) = tree_bounds(diam);
            let plus = exact(Rule::Psd, &t, Objective::unweighted());
            let std = exact(Rule::Standard, &t, Objective::unweighted());
            assert!(
                rat(lo) <= plus && plus <= rat(hi),
                "tree order {n}, diameter {diam}: value {plus} outside [{lo}, {hi}]"
            );
            assert!(plus <= std, "tree order {n}: psd above standard");
            seen += 1;
        }
    }
    // 1, 1, 1, 2, 3, 6, 11, 23, 47 trees on 1..=9 vertices.
    assert_eq!(seen, 95, "tree census size");
}

#[test]
fn adding_blue_vertices_outside_a_subgraph_bounds_the_whole() {
    // th₊(G) ≤ (n − k) + th₊(H) for every induced subgraph H of order k:
    // color everything outside H, then run H's optimal set.
    let mut rng = ChaCha8Rng::seed_from_u64(0x696e6475636564);
    for trial in 0..300 {
        let n = rng.gen_range(2..=8);
        let g = random_graph(&mut rng, n, [0.25, 0.5, 0.75][trial % 3]);
        let k = rng.gen_range(1..=n);
        let keep = {
            let mut picks: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = rng.gen_range(0..=i);
                picks.swap(i, j);
            }
            VertexSet::from_vertices(n, picks.into_iter().take(k))
        };
        let (h, _) = g.induced(&keep);
        let whole = exact(Rule::Psd, &g, Objective::unweighted());
        let part = exact(Rule::Psd, &h, Objective::unweighted());
        assert!(
            whole <= rat((n - k) as u64) + part,
            "trial {trial}: value {whole} above (n - k) + subgraph value {part} (n = {n}, k = {k})"
        );
    }
}

#[test]
fn weighted_values_are_monotone_and_capped_by_the_forcing_number() {
    let ladder: Vec<Rational> = [(1, 2), (1, 1), (3, 2), (2, 1), (3, 1)]
        .into_iter()
        .map(|(a, b)| Rational::new(a, b))
        .collect();
    for n in 1..=5 {
        for g in census::all_graphs(n) {
            let values: Vec<Rational> = ladder
                .iter()
                .map(|&w| exact(Rule::Psd, &g, Objective::weighted(w).expect("positive")))
                .collect();
            for pair in values.windows(2) {
                assert!(
                    pair[0] <= pair[1],
                    "weight increase lowered the value on an order-{n} graph"
                );
            }
            // For ω ≥ 1, the best minimum-size forcing set is still an
            // upper bound: th₊^ω ≤ ω·Z₊ + pt₊.
            let best_min = graph_propagation_time(Rule::Psd, &g);
            let Steps::Finite(graph_pt) = best_min.pt else {
                panic!("a minimum forcing set forces by definition");
            };
            for (&omega, &value) in ladder.iter().zip(&values).skip(1) {
                let cap = omega * rat(best_min.forcing_number as u64) + rat(u64::from(graph_pt));
                assert!(
                    value <= cap,
                    "order {n}: value {value} above omega*Z+ + pt+ = {cap} at omega {omega}"
                );
            }
        }
    }
}
