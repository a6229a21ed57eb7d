//! Named small graphs used throughout the tests and the CLI examples.
//!
//! Edge lists in the docs use 1-based labels.

use crate::graph::Graph;

fn build(n: usize, labeled_edges: &[(usize, usize)]) -> Graph {
    let edges: Vec<(usize, usize)> = labeled_edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edges(n, &edges).expect("fixture edges are valid")
}

/// Six vertices, edges 12 16 23 24 34 45 56. Maximal independent sets of
/// sizes 2 and 3 (`{1,4}` and `{1,3,5}`).
pub fn mixed_mis_sizes() -> Graph {
    build(6, &[(1, 2), (1, 6), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6)])
}

/// [`mixed_mis_sizes`] plus 35. Well-covered with seven maximal independent
/// sets of size 2, but no clique cover exists.
pub fn well_covered_nonuniform() -> Graph {
    build(6, &[(1, 2), (1, 6), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6)])
}

/// [`well_covered_nonuniform`] plus 15. Uniformly well-covered with the
/// partition `{1,5,6},{2,3,4}`.
pub fn uniformly_well_covered() -> Graph {
    build(6, &[(1, 2), (1, 5), (1, 6), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6)])
}

/// Edges 12 13 15 16 23 26 35 45 46: 3-partite, well-covered with
/// independence number 2, and no disjoint maximal cliques cover it.
pub fn coverless_well_covered() -> Graph {
    build(6, &[(1, 2), (1, 3), (1, 5), (1, 6), (2, 3), (2, 6), (3, 5), (4, 5), (4, 6)])
}

/// `C_n` with edges `i, i+1` and `n, 1`.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((n, 1));
    build(n, &edges)
}

/// `P_n` with edges `i, i+1`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    build(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

/// Complete multipartite graph with consecutive blocks of the given sizes.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut block = Vec::with_capacity(n);
    for (i, &size) in sizes.iter().enumerate() {
        block.extend(std::iter::repeat_n(i, size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if block[u] != block[v] {
                edges.push((u + 1, v + 1));
            }
        }
    }
    build(n, &edges)
}

/// The named fixtures with their file stems, in a fixed order.
pub fn named() -> Vec<(&'static str, Graph)> {
    vec![
        ("gA", mixed_mis_sizes()),
        ("gB", well_covered_nonuniform()),
        ("gC", uniformly_well_covered()),
        ("gD", coverless_well_covered()),
        ("c4", cycle(4)),
        ("c5", cycle(5)),
        ("c6", cycle(6)),
        ("p4", path(4)),
    ]
}
