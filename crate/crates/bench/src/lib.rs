//! Shared graph builders for the benchmark suite.

use forcelab_core::graph::generate;
use forcelab_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The ladder `P₁₀ □ P₂` — the canonical bigger-but-faster example.
pub fn ladder() -> Graph {
    generate::cartesian_product(&generate::path(10), &generate::path(2))
}

/// A reproducible Erdős–Rényi graph.
pub fn random_graph(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are simple")
}
