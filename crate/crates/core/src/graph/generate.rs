//! Generators for the named graph families used throughout the crate.
//!
//! Vertex numbering conventions (these matter for witness constructions and
//! are relied on by the formulas module):
//!
//! * `path(n)`: vertices `0..n` in path order, edges `{i, i+1}`.
//! * `cycle(n)`: vertices `0..n` in cyclic order, edges `{i, (i+1) mod n}`.
//! * `star(k)`: center `0`, leaves `1..=k`.
//! * `full_binary_tree(h)`: heap order — children of `i` are `2i+1`, `2i+2`.
//! * `cayley_tree(delta, h)`: BFS order from the root `0`.
//! * `cartesian_product(g, h)`: vertex `(i, j)` of `G □ H` becomes
//!   `i * h.order() + j` (row-major in the `G` coordinate).

use super::Graph;

/// The path Pₙ on `n ≥ 1` vertices, edges `{i, i+1}`.
///
/// # Panics
/// Panics if `n = 0` or `n` exceeds [`super::MAX_ORDER`].
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("path order within cap");
    for i in 1..n {
        g.add_edge(i - 1, i).expect("path edges are simple");
    }
    g
}

/// The cycle Cₙ, edges `{i, (i+1) mod n}`.
///
/// # Panics
/// Panics if `n < 3` (shorter "cycles" are not simple graphs) or if `n`
/// exceeds [`super::MAX_ORDER`].
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle requires n >= 3, got {n}");
    let mut g = path(n);
    g.add_edge(n - 1, 0).expect("closing edge is simple");
    g
}

/// The complete graph Kₙ.
///
/// # Panics
/// Panics if `n = 0` or `n` exceeds [`super::MAX_ORDER`].
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("complete graph order within cap");
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v).expect("complete graph edges are simple");
        }
    }
    g
}

/// The edgeless graph on `n ≥ 1` vertices (`n·K₁`).
///
/// # Panics
/// Panics if `n = 0` or `n` exceeds [`super::MAX_ORDER`].
pub fn edgeless(n: usize) -> Graph {
    Graph::empty(n).expect("edgeless graph order within cap")
}

/// The complete bipartite graph K_{a,b}; part one is `0..a`, part two is
/// `a..a+b`.
///
/// # Panics
/// Panics if `a + b` exceeds [`super::MAX_ORDER`].
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b).expect("bipartite order within cap");
    for u in 0..a {
        for v in a..(a + b) {
            g.add_edge(u, v).expect("bipartite edges are simple");
        }
    }
    g
}

/// The star K_{1,k}: center `0` joined to leaves `1..=k`. `star(0)` is K₁.
///
/// # Panics
/// Panics if `k + 1` exceeds [`super::MAX_ORDER`].
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

/// The full (perfect) binary tree of height `h`: every internal vertex has
/// two children and every leaf is at depth `h`. Order `2^(h+1) - 1`, heap
/// numbering with root `0`.
///
/// # Panics
/// Panics if the order exceeds [`super::MAX_ORDER`] (`h > 12`).
pub fn full_binary_tree(h: u32) -> Graph {
    let n = (1usize << (h + 1)) - 1;
    let mut g = Graph::empty(n).expect("binary tree order within cap");
    for i in 0..n {
        for c in [2 * i + 1, 2 * i + 2] {
            if c < n {
                g.add_edge(i, c).expect("tree edges are simple");
            }
        }
    }
    g
}

/// The regular tree of maximum degree `delta` and radius `h` (a Bethe
/// lattice ball): the root has `delta` children, every other internal vertex
/// has `delta - 1` children, and every leaf is at distance `h` from the
/// root. For `delta ≥ 3` the order is `(Δ(Δ-1)^h - 2)/(Δ-2)`; for
/// `delta = 2` this is the path on `2h + 1` vertices. Vertices are numbered
/// in BFS order from the root `0`.
///
/// # Panics
/// Panics if `delta < 2` or the order exceeds [`super::MAX_ORDER`].
pub fn cayley_tree(delta: usize, h: u32) -> Graph {
    assert!(delta >= 2, "cayley_tree requires delta >= 2, got {delta}");
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut level: Vec<usize> = vec![0];
    let mut next_id = 1usize;
    for depth in 0..h {
        let children_each = if depth == 0 { delta } else { delta - 1 };
        let mut next_level = Vec::with_capacity(level.len() * children_each);
        for &parent in &level {
            for _ in 0..children_each {
                edges.push((parent, next_id));
                next_level.push(next_id);
                next_id += 1;
            }
        }
        level = next_level;
    }
    Graph::from_edges(next_id, &edges).expect("cayley tree within cap")
}

/// The Cartesian product `G □ H`: vertex `(i, j)` becomes
/// `i * h.order() + j`; `(i, j)` and `(i', j')` are adjacent when `i = i'`
/// and `{j, j'} ∈ E(H)`, or `j = j'` and `{i, i'} ∈ E(G)`.
///
/// # Panics
/// Panics if the product order exceeds [`super::MAX_ORDER`].
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (gn, hn) = (g.order(), h.order());
    let mut out = Graph::empty(gn * hn).expect("product order within cap");
    let id = |i: usize, j: usize| i * hn + j;
    for i in 0..gn {
        for (u, v) in h.edges() {
            out.add_edge(id(i, u), id(i, v)).expect("product edges are simple");
        }
    }
    for j in 0..hn {
        for (u, v) in g.edges() {
            out.add_edge(id(u, j), id(v, j)).expect("product edges are simple");
        }
    }
    out
}

/// The disjoint union `G ∪ H`, with `H`'s vertices shifted up by
/// `g.order()`.
///
/// # Panics
/// Panics if the combined order exceeds [`super::MAX_ORDER`].
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.order();
    let mut out = Graph::empty(shift + h.order()).expect("union order within cap");
    for (u, v) in g.edges() {
        out.add_edge(u, v).expect("union edges are simple");
    }
    for (u, v) in h.edges() {
        out.add_edge(u + shift, v + shift).expect("union edges are simple");
    }
    out
}

/// The house graph: the 5-cycle `0-1-2-3-4-0` plus the chord `{1, 4}`
/// (a 4-cycle "body" `1-2-3-4` with the "roof" apex `0`).
pub fn house() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])
        .expect("house graph is simple")
}

/// The double diamond: two diamonds (K₄ minus an edge) glued along an edge.
/// Six vertices, nine edges; the shared edge is `{1, 4}`, whose endpoints
/// have degree four.
pub fn double_diamond() -> Graph {
    Graph::from_edges(
        6,
        &[
            (0, 1),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 4),
            (1, 5),
            (2, 5),
            (3, 4),
            (4, 5),
        ],
    )
    .expect("double diamond is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Steps;

    #[test]
    fn path_and_cycle_shapes() {
        let p = path(6);
        assert_eq!((p.order(), p.size()), (6, 5));
        assert!(p.is_tree());
        assert_eq!(p.diameter(), Steps::Finite(5));

        let c = cycle(6);
        assert!(c.is_cycle_graph());
        assert!(c.has_edge(5, 0));

        assert_eq!(path(1).order(), 1);
    }

    #[test]
    #[should_panic(expected = "cycle requires n >= 3")]
    fn cycle_rejects_tiny_orders() {
        let _ = cycle(2);
    }

    #[test]
    fn complete_and_bipartite_shapes() {
        let k5 = complete(5);
        assert_eq!(k5.size(), 10);
        assert!(k5.is_complete());

        let k23 = complete_bipartite(2, 3);
        assert_eq!((k23.order(), k23.size()), (5, 6));
        assert!(!k23.has_edge(0, 1));
        assert!(k23.has_edge(0, 2));

        let s = star(4);
        assert_eq!((s.order(), s.size()), (5, 4));
        assert_eq!(s.degree(0), 4);
        assert!(s.is_tree());
        assert_eq!(star(0).order(), 1);

        assert_eq!(edgeless(5).size(), 0);
    }

    #[test]
    fn binary_tree_shape() {
        let t = full_binary_tree(3);
        assert_eq!(t.order(), 15);
        assert!(t.is_tree());
        assert_eq!(t.degree(0), 2);
        assert_eq!(t.degree(1), 3);
        assert_eq!(t.degree(14), 1);
        assert_eq!(t.diameter(), Steps::Finite(6));
        assert_eq!(full_binary_tree(0).order(), 1);
    }

    #[test]
    fn cayley_tree_shape() {
        // Δ = 3, h = 2: order (3·2² - 2)/1 = 10.
        let t = cayley_tree(3, 2);
        assert_eq!(t.order(), 10);
        assert!(t.is_tree());
        assert_eq!(t.max_degree(), 3);
        assert_eq!(t.degree(0), 3);
        assert_eq!(t.diameter(), Steps::Finite(4));

        // Δ = 4, h = 2: order (4·3² - 2)/2 = 17.
        let t = cayley_tree(4, 2);
        assert_eq!(t.order(), 17);
        assert_eq!(t.max_degree(), 4);

        // Δ = 2 degenerates to a path on 2h + 1 vertices.
        let p = cayley_tree(2, 3);
        assert_eq!(p.order(), 7);
        assert!(p.is_tree());
        assert_eq!(p.max_degree(), 2);

        assert_eq!(cayley_tree(5, 0).order(), 1);
    }

    #[test]
    fn product_shape() {
        // P₃ □ P₂: the 3×2 grid. Vertex (i, j) -> 2i + j.
        let g = cartesian_product(&path(3), &path(2));
        assert_eq!((g.order(), g.size()), (6, 7));
        assert!(g.has_edge(0, 1)); // (0,0)-(0,1): H edge
        assert!(g.has_edge(0, 2)); // (0,0)-(1,0): G edge
        assert!(!g.has_edge(0, 3)); // (0,0)-(1,1): diagonal
        assert_eq!(g.degree(2), 3);
    }

    #[test]
    fn union_shape() {
        let g = disjoint_union(&path(3), &cycle(3));
        assert_eq!((g.order(), g.size()), (6, 5));
        assert_eq!(g.components().len(), 2);
        assert!(g.has_edge(3, 4) && g.has_edge(3, 5));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn named_fixtures() {
        let h = house();
        assert_eq!((h.order(), h.size()), (5, 6));
        assert_eq!(h.degrees(), vec![2, 3, 2, 2, 3]);
        assert!(h.is_connected());

        let d = double_diamond();
        assert_eq!((d.order(), d.size()), (6, 9));
        let mut deg = d.degrees();
        deg.sort_unstable();
        assert_eq!(deg, vec![2, 2, 3, 3, 4, 4]);
        // Two diamonds: {0,1,3,4} and {1,2,4,5}, sharing the edge {1,4}.
        for (u, v) in [(0, 1), (0, 3), (0, 4), (1, 4), (3, 4)] {
            assert!(d.has_edge(u, v));
        }
        assert!(!d.has_edge(1, 3));
        assert!(!d.has_edge(2, 4));
    }
}
