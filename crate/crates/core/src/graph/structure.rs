//! Structural computations on graphs: independence number and induced
//! subgraph containment. Both are exact and exponential-time in the worst
//! case; they are intended for the small graphs this crate targets.

use super::{Graph, VertexSet};

impl Graph {
    /// The independence number α(G): the size of a largest set of pairwise
    /// non-adjacent vertices.
    ///
    /// Branch-and-bound over candidate sets; exact for any order the crate
    /// constructs, intended for orders up to a few dozen.
    pub fn independence_number(&self) -> usize {
        fn rec(g: &Graph, candidates: VertexSet, chosen: usize, best: &mut usize) {
            if chosen + candidates.len() <= *best {
                return;
            }
            // Branch vertex: a candidate of maximum degree within the
            // candidate set, so both branches shrink the problem fast.
            let mut pick = None;
            let mut pick_deg = 0;
            for v in candidates.iter() {
                let d = g.adj[v].intersection_len(&candidates);
                if pick.is_none() || d > pick_deg {
                    pick = Some(v);
                    pick_deg = d;
                }
            }
            let Some(v) = pick else {
                *best = (*best).max(chosen);
                return;
            };
            // Include v: drop v and its neighbors from the candidates.
            let mut without_nbhd = candidates.clone();
            without_nbhd.remove(v);
            without_nbhd.remove_all(&g.adj[v]);
            rec(g, without_nbhd, chosen + 1, best);
            // Exclude v — only worth trying when v has a neighbor among the
            // candidates; an isolated candidate always joins the set.
            if pick_deg > 0 {
                let mut without_v = candidates;
                without_v.remove(v);
                rec(g, without_v, chosen, best);
            }
        }
        let mut best = 0;
        rec(self, self.vertex_set(), 0, &mut best);
        best
    }

    /// Checks α(G) ≤ 2 in O(n³) time.
    ///
    /// Returns `Ok(())` when no three vertices are pairwise non-adjacent,
    /// or `Err([u, v, w])` with the lexicographically first independent
    /// triple otherwise.
    pub fn alpha_at_most_2(&self) -> Result<(), [usize; 3]> {
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u].contains(v) {
                    continue;
                }
                for w in (v + 1)..self.n {
                    if !self.adj[u].contains(w) && !self.adj[v].contains(w) {
                        return Err([u, v, w]);
                    }
                }
            }
        }
        Ok(())
    }

    /// Searches for an induced copy of `pattern` in `self`.
    ///
    /// Returns a map `phi` with `phi[i]` the host vertex playing pattern
    /// vertex `i`, such that `{i, j} ∈ E(pattern)` **iff**
    /// `{phi[i], phi[j]} ∈ E(self)` — an induced embedding, not a mere
    /// subgraph. Returns `None` when no copy exists.
    ///
    /// Backtracking with degree pruning; fine for the small patterns
    /// (cycles, the house, the double diamond) this crate cares about.
    pub fn find_induced(&self, pattern: &Graph) -> Option<Vec<usize>> {
        let k = pattern.order();
        if k > self.n {
            return None;
        }
        if k == 0 {
            return Some(Vec::new());
        }
        // Assign pattern vertices in descending-degree order so adjacency
        // constraints bite early.
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));

        let mut phi = vec![usize::MAX; k];
        let mut used = VertexSet::empty(self.n);
        if self.embed(pattern, &order, 0, &mut phi, &mut used) {
            debug_assert!(is_induced_embedding(self, pattern, &phi));
            Some(phi)
        } else {
            None
        }
    }

    fn embed(
        &self,
        pattern: &Graph,
        order: &[usize],
        depth: usize,
        phi: &mut Vec<usize>,
        used: &mut VertexSet,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let p = order[depth];
        'hosts: for host in 0..self.n {
            if used.contains(host) || self.degree(host) < pattern.degree(p) {
                continue;
            }
            for &q in &order[..depth] {
                if pattern.has_edge(p, q) != self.has_edge(host, phi[q]) {
                    continue 'hosts;
                }
            }
            phi[p] = host;
            used.insert(host);
            if self.embed(pattern, order, depth + 1, phi, used) {
                return true;
            }
            used.remove(host);
            phi[p] = usize::MAX;
        }
        false
    }

    /// Convenience wrapper: does `self` contain an induced copy of
    /// `pattern`?
    pub fn has_induced(&self, pattern: &Graph) -> bool {
        self.find_induced(pattern).is_some()
    }
}

/// Verifies that `phi` is an induced embedding of `pattern` into `host`.
fn is_induced_embedding(host: &Graph, pattern: &Graph, phi: &[usize]) -> bool {
    let k = pattern.order();
    if phi.len() != k {
        return false;
    }
    let distinct: std::collections::HashSet<_> = phi.iter().collect();
    if distinct.len() != k {
        return false;
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if pattern.has_edge(i, j) != host.has_edge(phi[i], phi[j]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    /// Exhaustive independence number for cross-checking (n ≤ 20 or so).
    fn alpha_by_enumeration(g: &Graph) -> usize {
        let n = g.order();
        assert!(n <= 20);
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            let independent = members
                .iter()
                .enumerate()
                .all(|(i, &u)| members[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
            if independent {
                best = best.max(members.len());
            }
        }
        best
    }

    #[test]
    fn independence_number_on_known_graphs() {
        assert_eq!(generate::complete(4).independence_number(), 1);
        assert_eq!(generate::edgeless(5).independence_number(), 5);
        assert_eq!(generate::cycle(5).independence_number(), 2);
        assert_eq!(generate::cycle(6).independence_number(), 3);
        assert_eq!(generate::path(6).independence_number(), 3);
        assert_eq!(generate::star(7).independence_number(), 7);
        assert_eq!(generate::house().independence_number(), 2);
        assert_eq!(generate::double_diamond().independence_number(), 2);
        assert_eq!(generate::complete_bipartite(3, 4).independence_number(), 4);
        assert_eq!(generate::complete(1).independence_number(), 1);
    }

    #[test]
    fn independence_number_matches_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xa1fa);
        for n in 1..=9 {
            for _ in 0..30 {
                let mut g = Graph::empty(n).unwrap();
                for u in 0..n {
                    for v in (u + 1)..n {
                        if rng.gen_bool(0.35) {
                            g.add_edge(u, v).unwrap();
                        }
                    }
                }
                assert_eq!(
                    g.independence_number(),
                    alpha_by_enumeration(&g),
                    "mismatch on {g:?}"
                );
            }
        }
    }

    #[test]
    fn alpha_at_most_2_agrees_with_alpha() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xa1fa + 1);
        for n in 1..=8 {
            for _ in 0..40 {
                let mut g = Graph::empty(n).unwrap();
                for u in 0..n {
                    for v in (u + 1)..n {
                        if rng.gen_bool(0.5) {
                            g.add_edge(u, v).unwrap();
                        }
                    }
                }
                match g.alpha_at_most_2() {
                    Ok(()) => assert!(g.independence_number() <= 2),
                    Err([u, v, w]) => {
                        assert!(u < v && v < w);
                        assert!(!g.has_edge(u, v) && !g.has_edge(u, w) && !g.has_edge(v, w));
                        assert!(g.independence_number() >= 3);
                    }
                }
            }
        }
    }

    #[test]
    fn induced_containment_facts() {
        let c5 = generate::cycle(5);
        let p4 = generate::path(4);
        let house = generate::house();
        let dd = generate::double_diamond();

        // C₅ minus any vertex is P₄.
        let hit = c5.find_induced(&p4).expect("P4 inside C5");
        assert_eq!(hit.len(), 4);

        // The house is C₅ plus a chord, so it has no *induced* C₅ ...
        assert!(!house.has_induced(&c5));
        // ... but it does contain an induced triangle and an induced C₄.
        assert!(house.has_induced(&generate::cycle(3)));
        assert!(house.has_induced(&generate::cycle(4)));

        // C₅ has no induced C₄ (any four vertices induce a P₄).
        assert!(!c5.has_induced(&generate::cycle(4)));

        // The double diamond contains an induced diamond (K₄ minus an edge).
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(dd.has_induced(&diamond));
        // K₄ does not embed: the double diamond has no K₄.
        assert!(!dd.has_induced(&generate::complete(4)));

        // Patterns larger than the host can never embed.
        assert!(!p4.has_induced(&c5));
        // The one-vertex pattern embeds everywhere.
        assert!(c5.has_induced(&generate::complete(1)));
    }

    #[test]
    fn induced_embedding_is_validated() {
        // Spot-check the returned map on a nontrivial pair.
        let g = generate::cartesian_product(&generate::path(3), &generate::path(3));
        let c4 = generate::cycle(4);
        let phi = g.find_induced(&c4).expect("grid contains C4");
        for i in 0..4 {
            for j in (i + 1)..4 {
                assert_eq!(c4.has_edge(i, j), g.has_edge(phi[i], phi[j]));
            }
        }
        // The grid's boundary (all vertices but the center) is an induced C₈.
        assert!(g.has_induced(&generate::cycle(8)));
        // Every 6-cycle in the grid bounds a domino and carries a chord, and
        // odd cycles cannot embed in a bipartite graph at all.
        assert!(!g.has_induced(&generate::cycle(6)));
        assert!(!g.has_induced(&generate::cycle(7)));
    }
}
