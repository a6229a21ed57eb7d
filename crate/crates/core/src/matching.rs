//! Maximum bipartite matching by augmenting paths (Kuhn's algorithm).
//!
//! Left vertices are processed in ascending order; each takes its lowest free
//! right neighbor if any, and otherwise tries to re-route its neighbors'
//! partners in ascending order, so the matching found is deterministic.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

fn augment(
    g: &Graph,
    u: usize,
    right: VertexSet,
    visited: &mut VertexSet,
    mate_of_right: &mut [Option<usize>],
) -> bool {
    let candidates = (g.neighbors(u) & right) - *visited;
    // A free neighbor is taken before any existing pair is re-routed.
    if let Some(v) = candidates.iter().find(|&v| mate_of_right[v].is_none()) {
        visited.insert(v);
        mate_of_right[v] = Some(u);
        return true;
    }
    for v in candidates {
        if visited.contains(v) {
            continue;
        }
        visited.insert(v);
        let free = match mate_of_right[v] {
            None => true,
            Some(w) => augment(g, w, right, visited, mate_of_right),
        };
        if free {
            mate_of_right[v] = Some(u);
            return true;
        }
    }
    false
}

/// A maximum matching using only edges between `left` and `right`, as
/// `(left_vertex, right_vertex)` pairs sorted by left vertex.
pub fn maximum_matching(g: &Graph, left: VertexSet, right: VertexSet) -> Result<Vec<(usize, usize)>> {
    g.check_set(left)?;
    g.check_set(right)?;
    if !left.is_disjoint(right) {
        return Err(Error::OverlappingSides);
    }
    let mut mate_of_right = vec![None; g.n()];
    for u in left {
        let mut visited = VertexSet::EMPTY;
        augment(g, u, right, &mut visited, &mut mate_of_right);
    }
    let mut pairs: Vec<(usize, usize)> = mate_of_right
        .iter()
        .enumerate()
        .filter_map(|(v, mate)| mate.map(|u| (u, v)))
        .collect();
    pairs.sort_unstable();
    Ok(pairs)
}

/// A matching saturating both `left` and `right`, if one exists.
pub fn bipartite_matching(g: &Graph, left: VertexSet, right: VertexSet) -> Result<Option<Vec<(usize, usize)>>> {
    let pairs = maximum_matching(g, left, right)?;
    if left.len() == right.len() && pairs.len() == left.len() {
        Ok(Some(pairs))
    } else {
        Ok(None)
    }
}

/// Checks that `pairs` is a perfect matching between `left` and `right` in `g`.
pub fn is_perfect_matching(g: &Graph, left: VertexSet, right: VertexSet, pairs: &[(usize, usize)]) -> bool {
    let mut used_left = VertexSet::EMPTY;
    let mut used_right = VertexSet::EMPTY;
    for &(u, v) in pairs {
        if u >= g.n() || v >= g.n() || !left.contains(u) || !right.contains(v) || !g.has_edge(u, v) {
            return false;
        }
        if used_left.contains(u) || used_right.contains(v) {
            return false;
        }
        used_left.insert(u);
        used_right.insert(v);
    }
    used_left == left && used_right == right
}
