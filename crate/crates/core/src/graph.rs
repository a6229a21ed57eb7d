//! Simple undirected graphs on at most 64 vertices and the elementary
//! predicates (independence, cliques, domination, vertex covers) the
//! recognition routines are phrased in.
//!
//! Vertices are `0..n` internally. All user-facing text uses 1-based labels;
//! the shift happens in [`crate::io`].

use crate::error::{Error, Result, MAX_VERTICES};
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// A simple undirected graph stored as one neighbor mask per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    /// Builds a graph from 0-based edges. Duplicates are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbor masks, checking symmetry, loops and range.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        let g = Graph { n, adj };
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let all = g.vertices();
        for v in 0..n {
            let row = g.adj[v];
            if row.contains(v) {
                return Err(Error::Loop(v));
            }
            if let Some(bad) = (row - all).first() {
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            for u in row {
                if !g.adj[u].contains(v) {
                    return Err(Error::Asymmetric(v, u));
                }
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `V(G)` as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Union of the open neighborhoods of `set`.
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| (all - self.adj[v]).without(v)).collect();
        Graph { n: self.n, adj }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Checks that every member of `set` is a vertex of this graph.
    pub fn check_set(&self, set: VertexSet) -> Result<()> {
        match (set - self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    /// No edge has both endpoints in `set`.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Independent and no outside vertex can be added.
    pub fn is_maximal_independent(&self, set: VertexSet) -> bool {
        self.is_independent(set) && (self.vertices() - set).iter().all(|v| !self.adj[v].is_disjoint(set))
    }

    /// Every pair of members is adjacent.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set.without(v)).is_subset(self.adj[v]))
    }

    /// A clique such that no outside vertex is adjacent to all of it.
    pub fn is_maximal_clique(&self, set: VertexSet) -> bool {
        self.is_clique(set)
            && !set.is_empty()
            && (self.vertices() - set).iter().all(|v| !set.is_subset(self.adj[v]))
    }

    /// Every vertex of `b` has a neighbor in `a`. Membership of a `b`-vertex
    /// in `a` does not count as domination; an edge is required.
    pub fn dominates(&self, a: VertexSet, b: VertexSet) -> bool {
        b.is_subset(self.neighborhood(a))
    }

    /// Every vertex is in `a` or adjacent to `a`.
    pub fn is_dominating_set(&self, a: VertexSet) -> bool {
        (a | self.neighborhood(a)) == self.vertices()
    }

    /// Dominating, and no single deletion stays dominating. Single deletions
    /// suffice because domination is preserved under supersets.
    pub fn is_minimal_dominating_set(&self, a: VertexSet) -> bool {
        self.is_dominating_set(a) && a.iter().all(|v| !self.is_dominating_set(a.without(v)))
    }

    /// Every edge has an endpoint in `b`.
    pub fn is_vertex_cover(&self, b: VertexSet) -> bool {
        self.edges().all(|(u, v)| b.contains(u) || b.contains(v))
    }

    /// Every part of `p` is independent, i.e. the graph is `s`-partite with these classes.
    pub fn is_partition_into_independent_sets(&self, p: &Partition) -> bool {
        p.parts().iter().all(|&part| self.is_independent(part))
    }

    /// The subgraph induced on `set`, relabeled to `0..|set|`. The returned
    /// vector maps new indices to old ones (ascending).
    pub fn induced(&self, set: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if set.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_set(set)?;
        let old: Vec<usize> = set.iter().collect();
        let adj = old
            .iter()
            .map(|&v| {
                old.iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.adj[v].contains(u))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Ok((Graph { n: old.len(), adj }, old))
    }

    /// A proper 2-coloring `(side0, side1)` if one exists. Each component's
    /// lowest vertex goes to side 0.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = [VertexSet::EMPTY; 2];
        let mut seen = VertexSet::EMPTY;
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut frontier = VertexSet::singleton(start);
            let mut color = 0;
            while !frontier.is_empty() {
                side[color] = side[color] | frontier;
                seen = seen | frontier;
                let next = self.neighborhood(frontier);
                if !next.is_disjoint(side[color]) {
                    return None;
                }
                frontier = next - seen;
                color ^= 1;
            }
        }
        Some((side[0], side[1]))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|row| row.is_empty())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
        write!(f, "Graph(n={}; {})", self.n, edges.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn set(labels: &[usize]) -> VertexSet {
        labels.iter().map(|l| l - 1).collect()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Graph::empty(0), Err(Error::VertexCount(0)));
        assert_eq!(Graph::empty(65), Err(Error::VertexCount(65)));
        assert!(Graph::empty(64).is_ok());
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        let asym = vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert!(Graph::from_adjacency(asym).is_err());
    }

    #[test]
    fn complement_examples() {
        let k4c = complete(4).complement();
        assert_eq!(k4c.edge_count(), 0);

        let c5c = cycle(5).complement();
        assert_eq!(c5c.edge_count(), 5);
        assert!((0..5).all(|v| c5c.degree(v) == 2));

        let gcc = uniformly_well_covered().complement();
        let edges: Vec<(usize, usize)> = gcc.edges().map(|(u, v)| (u + 1, v + 1)).collect();
        assert_eq!(edges, vec![(1, 3), (1, 4), (2, 5), (2, 6), (3, 6), (4, 6)]);
        assert!(gcc.is_bipartite());
    }

    #[test]
    fn independence_examples() {
        assert!(cycle(6).is_independent(VertexSet::EMPTY));
        assert!(cycle(4).is_independent(set(&[1, 3])));
        assert!(!uniformly_well_covered().is_independent(set(&[1, 5])));
    }

    #[test]
    fn clique_examples() {
        let k5 = complete(5);
        for bits in 0..32u64 {
            assert!(k5.is_clique(VertexSet::from_bits(bits)));
        }
        assert!(uniformly_well_covered().is_maximal_clique(set(&[2, 3, 4])));
        let ga = mixed_mis_sizes();
        assert!(ga.is_clique(set(&[3, 4])));
        assert!(!ga.is_maximal_clique(set(&[3, 4])));
        assert!(ga.is_maximal_clique(set(&[2, 3, 4])));
    }

    #[test]
    fn domination_examples() {
        let c6 = cycle(6);
        assert!(c6.dominates(c6.vertices(), set(&[1, 2])));
        assert!(c6.dominates(set(&[3, 6]), set(&[1, 2])));
        assert!(!coverless_well_covered().dominates(set(&[4]), set(&[1, 2, 3])));
        // Membership alone does not dominate.
        assert!(!c6.dominates(set(&[1]), set(&[1])));

        let k4 = complete(4);
        for v in 0..4 {
            assert!(k4.is_minimal_dominating_set(VertexSet::singleton(v)));
        }
        assert!(c6.is_minimal_dominating_set(set(&[1, 4])));
        assert!(c6.is_dominating_set(set(&[1, 2, 4])));
        assert!(!c6.is_minimal_dominating_set(set(&[1, 2, 4])));
    }

    #[test]
    fn vertex_cover_examples() {
        let gb = well_covered_nonuniform();
        assert!(gb.is_vertex_cover(gb.vertices()));
        assert!(cycle(4).is_vertex_cover(set(&[1, 3])));
        // V minus the maximal independent set {1,3}.
        assert!(gb.is_vertex_cover(set(&[2, 4, 5, 6])));
        // Leaves the edge 1-6 uncovered.
        assert!(!gb.is_vertex_cover(set(&[2, 3, 4, 5])));
    }

    #[test]
    fn partition_examples() {
        let e = Graph::empty(4).unwrap();
        assert!(e.is_partition_into_independent_sets(&Partition::new(4, vec![e.vertices()]).unwrap()));

        let gcc = uniformly_well_covered().complement();
        let p = Partition::new(6, vec![set(&[1, 5, 6]), set(&[2, 3, 4])]).unwrap();
        assert!(gcc.is_partition_into_independent_sets(&p));

        let c5 = cycle(5);
        for bits in 1..31u64 {
            let a = VertexSet::from_bits(bits);
            let p = Partition::new(5, vec![a, c5.vertices() - a]).unwrap();
            assert!(!c5.is_partition_into_independent_sets(&p));
        }
    }

    #[test]
    fn induced_examples() {
        let c6 = cycle(6);
        let (same, map) = c6.induced(c6.vertices()).unwrap();
        assert_eq!(same, c6);
        assert_eq!(map, (0..6).collect::<Vec<_>>());

        let (p3, map) = c6.induced(set(&[1, 2, 3])).unwrap();
        assert_eq!(p3, path(3));
        assert_eq!(map, vec![0, 1, 2]);

        let (tri, _) = coverless_well_covered().induced(set(&[1, 2, 3])).unwrap();
        assert_eq!(tri, complete(3));

        assert_eq!(c6.induced(VertexSet::EMPTY), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        let (a, b) = path(4).bipartition().unwrap();
        assert_eq!(a, set(&[1, 3]));
        assert_eq!(b, set(&[2, 4]));
    }
}
