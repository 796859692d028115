//! Exhaustive enumeration of small graphs and small trees up to
//! isomorphism, for oracle-style test sweeps.
//!
//! The point of this module is trust, not speed: every isomorphism class
//! is found by brute force, so test suites can sweep "all graphs on `n ≤ 8`
//! vertices" or "all trees on `n ≤ 9` vertices" and cross-check solvers,
//! formulas, and classifiers against each other with no generator cleverness
//! to doubt.
//!
//! * [`all_graphs`] scans every edge mask of the order (there are
//!   `2^{n(n−1)/2}`) in ascending order and keeps a mask exactly when no
//!   isomorphic mask preceded it, marking each kept mask's entire orbit
//!   under all `n!` vertex permutations. Representatives are therefore the
//!   lexicographically least mask of each class, in ascending order —
//!   deterministic regardless of thread count.
//! * [`all_trees`] grows trees one leaf at a time — deleting a leaf of any
//!   tree leaves a smaller tree, so attaching a leaf at every vertex of
//!   one representative per smaller class reaches every class — and dedupes
//!   by the classic rooted-tree canonical form (sorted bracket encoding
//!   from the tree's center).
//!
//! Both enumerations are deterministic regardless of thread count.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use rayon::prelude::*;

use crate::graph::Graph;

/// Largest order [`all_graphs`] accepts.
pub const MAX_GRAPH_CENSUS_ORDER: usize = 8;

/// Largest order [`all_trees`] accepts.
pub const MAX_TREE_CENSUS_ORDER: usize = 9;

/// The vertex pairs of an order-`n` graph in column-major upper-triangle
/// order — `(0,1), (0,2), (1,2), (0,3), …` — the same order the graph6
/// format assigns its adjacency bits. Edge masks throughout this module
/// set bit `k` for the `k`-th pair of this list.
pub fn edge_list(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

/// Bit position of the pair `{u, v}` in [`edge_list`] order.
fn pair_position(u: usize, v: usize) -> usize {
    let (a, b) = (u.min(v), u.max(v));
    b * (b - 1) / 2 + a
}

fn mask_to_graph(n: usize, pairs: &[(usize, usize)], mask: u32) -> Graph {
    let mut g = Graph::empty(n).expect("census orders are within the cap");
    for (k, &(u, v)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.add_edge(u, v).expect("distinct pairs");
        }
    }
    g
}

/// One representative per isomorphism class of simple graphs on `n`
/// vertices (connected or not), deterministically ordered.
///
/// Class counts for `n = 1..=8`: 1, 2, 4, 11, 34, 156, 1044, 12346.
/// The `n = 8` sweep scans `2^28` masks and takes a few seconds.
///
/// # Panics
/// Panics if `n` is zero or exceeds [`MAX_GRAPH_CENSUS_ORDER`].
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_GRAPH_CENSUS_ORDER).contains(&n),
        "all_graphs supports orders 1 ..= {MAX_GRAPH_CENSUS_ORDER}, got {n}"
    );
    let pairs = edge_list(n);
    let e = pairs.len();

    // For each vertex permutation π, where each edge bit lands:
    // maps[p][k] = position of {π(u), π(v)} for the k-th pair {u, v}.
    let maps: Vec<Vec<u8>> = (0..n)
        .permutations(n)
        .map(|pi| {
            pairs
                .iter()
                .map(|&(u, v)| pair_position(pi[u], pi[v]) as u8)
                .collect()
        })
        .collect();

    let words = ((1usize << e) + 63) / 64;
    let seen: Vec<AtomicU64> = std::iter::repeat_with(|| AtomicU64::new(0))
        .take(words)
        .collect();
    let mut reps = Vec::new();

    for mask in 0..(1u32 << e) {
        let (word, bit) = (mask as usize / 64, mask % 64);
        if seen[word].load(Ordering::Relaxed) >> bit & 1 == 1 {
            continue;
        }
        reps.push(mask_to_graph(n, &pairs, mask));
        // Mark the whole orbit before moving on, so every later unseen
        // mask really is a new class. Marking is idempotent, hence safe
        // to parallelize; the scan itself stays serial and deterministic.
        maps.par_chunks(512).for_each(|chunk| {
            for map in chunk {
                let mut image = 0u32;
                for k in 0..e {
                    if mask >> k & 1 == 1 {
                        image |= 1 << map[k];
                    }
                }
                seen[image as usize / 64].fetch_or(1 << (image % 64), Ordering::Relaxed);
            }
        });
    }
    reps
}

/// One representative per isomorphism class of *connected* graphs on `n`
/// vertices, in [`all_graphs`] order.
///
/// Class counts for `n = 1..=8`: 1, 1, 2, 6, 21, 112, 853, 11117.
///
/// # Panics
/// As [`all_graphs`].
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

// ============================================================================
// Trees
// ============================================================================

/// The one or two center vertices of a tree (peel leaves until ≤ 2 remain).
fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = g.degrees();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut frontier: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &frontier {
            removed[v] = true;
            remaining -= 1;
            for u in g.neighbors(v).iter() {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Sorted-bracket encoding of the tree rooted at `root`: isomorphic rooted
/// trees encode identically.
fn rooted_encoding(g: &Graph, root: usize, parent: Option<usize>) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = g
        .neighbors(root)
        .iter()
        .filter(|&u| Some(u) != parent)
        .map(|u| rooted_encoding(g, u, Some(root)))
        .collect();
    children.sort();
    let mut out = vec![b'('];
    for child in children {
        out.extend(child);
    }
    out.push(b')');
    out
}

/// Canonical form of a free tree: the smaller of the center-rooted
/// encodings. Two trees are isomorphic iff their canonical forms match.
fn tree_canonical_form(g: &Graph) -> Vec<u8> {
    tree_centers(g)
        .into_iter()
        .map(|c| rooted_encoding(g, c, None))
        .min()
        .expect("trees have at least one center")
}

/// One representative per isomorphism class of trees on `n` vertices,
/// ordered by canonical form (deterministic; deeper shapes sort before
/// bushier ones, so the path comes first and the star last).
///
/// Class counts for `n = 1..=9`: 1, 1, 1, 2, 3, 6, 11, 23, 47.
///
/// # Panics
/// Panics if `n` is zero or exceeds [`MAX_TREE_CENSUS_ORDER`].
pub fn all_trees(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_TREE_CENSUS_ORDER).contains(&n),
        "all_trees supports orders 1 ..= {MAX_TREE_CENSUS_ORDER}, got {n}"
    );
    // Grow one leaf at a time: deleting a leaf of any tree on k vertices
    // leaves a tree on k − 1 vertices, so attaching a new leaf at every
    // vertex of one representative per smaller class reaches every class.
    let mut layer: BTreeMap<Vec<u8>, Vec<(usize, usize)>> = BTreeMap::new();
    let lone = Graph::empty(1).expect("one vertex fits the cap");
    layer.insert(tree_canonical_form(&lone), Vec::new());
    for k in 2..=n {
        let mut next = BTreeMap::new();
        for edges in layer.values() {
            for v in 0..(k - 1) {
                let mut grown = edges.clone();
                grown.push((v, k - 1));
                let tree = Graph::from_edges(k, &grown).expect("leaf extension stays simple");
                next.entry(tree_canonical_form(&tree)).or_insert(grown);
            }
        }
        layer = next;
    }
    layer
        .into_values()
        .map(|edges| Graph::from_edges(n, &edges).expect("stored edges stay simple"))
        .collect()
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn edge_order_matches_graph6_bits() {
        assert_eq!(
            edge_list(4),
            vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
        );
        assert_eq!(edge_list(1), vec![]);
    }

    #[test]
    fn graph_class_counts_match_the_literature() {
        // Numbers of graphs (and connected graphs) on n unlabeled nodes.
        let all = [1usize, 2, 4, 11, 34, 156, 1044];
        let connected = [1usize, 1, 2, 6, 21, 112, 853];
        for n in 1..=7 {
            let reps = all_graphs(n);
            assert_eq!(reps.len(), all[n - 1], "all graphs on {n}");
            assert_eq!(
                reps.iter().filter(|g| g.is_connected()).count(),
                connected[n - 1],
                "connected graphs on {n}"
            );
            assert!(reps.iter().all(|g| g.order() == n));
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        assert_eq!(all_graphs(5), all_graphs(5));
        assert_eq!(all_trees(7), all_trees(7));
    }

    #[test]
    fn tree_class_counts_match_the_literature() {
        let counts = [1usize, 1, 1, 2, 3, 6, 11, 23, 47];
        for n in 1..=9 {
            let trees = all_trees(n);
            assert_eq!(trees.len(), counts[n - 1], "trees on {n}");
            assert!(
                trees.iter().all(|t| t.order() == n && t.is_tree()),
                "every representative on {n} vertices is a tree"
            );
        }
    }

    #[test]
    fn small_tree_shapes() {
        // On four vertices: the path sorts first, the star last.
        let trees = all_trees(4);
        assert_eq!(trees.len(), 2);
        assert_eq!(trees[0].max_degree(), 2);
        assert_eq!(trees[1].max_degree(), 3);

        let k2 = all_trees(2);
        assert_eq!(k2, vec![generate::complete(2)]);
        assert_eq!(all_trees(1)[0].order(), 1);
    }

    #[test]
    fn canonical_form_separates_and_identifies() {
        // Same tree under a relabeling: identical forms.
        let t1 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        let t2 = Graph::from_edges(5, &[(4, 3), (3, 2), (2, 1), (2, 0)]).unwrap();
        assert_eq!(tree_canonical_form(&t1), tree_canonical_form(&t2));
        // Different trees: different forms.
        let star = generate::star(4);
        let path = generate::path(5);
        assert_ne!(tree_canonical_form(&star), tree_canonical_form(&path));
    }
}
