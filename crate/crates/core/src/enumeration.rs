//! Exhaustive enumeration: maximal independent sets, maximal cliques, disjoint
//! maximal-clique covers and minimal dominating sets. These are the ground
//! truth the recognition and algebraic routes are checked against.
//!
//! Every list is produced in a deterministic order so results can be pinned
//! exactly in tests.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::CliqueCover;
use crate::recognition::has_independent_dominating_set_outside;
use crate::vertex_set::VertexSet;

/// Default vertex bound for brute-force dominating-set enumeration.
pub const DEFAULT_DOMINATION_LIMIT: usize = 16;

/// All maximal independent sets of a graph, sorted ascending by mask value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisReport {
    pub sets: Vec<VertexSet>,
    pub min_size: usize,
    pub max_size: usize,
}

impl MisReport {
    pub fn independence_number(&self) -> usize {
        self.max_size
    }

    pub fn is_pure(&self) -> bool {
        self.min_size == self.max_size
    }

    pub fn has_size(&self, size: usize) -> bool {
        self.sets.iter().any(|s| s.len() == size)
    }
}

/// Why a graph is not uniformly well-covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonUniformReason {
    /// No partition of `V(G)` into disjoint maximal cliques exists.
    NoCoverExists,
    /// Every candidate cover has a part dominated from outside by an
    /// independent set; this reports the first cover tried.
    IndependentDominator { cover: CliqueCover, clique_index: usize, witness: VertexSet },
}

/// A verdict together with a witness that can be re-checked with the
/// predicates on [`Graph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    WellCovered { common_size: usize },
    NotWellCovered { witness_small: VertexSet, witness_large: VertexSet },
    UniformlyWellCovered { partition: CliqueCover },
    NotUniform { reason: NonUniformReason },
}

impl Certificate {
    /// True for `WellCovered` and `UniformlyWellCovered`.
    pub fn holds(&self) -> bool {
        matches!(self, Certificate::WellCovered { .. } | Certificate::UniformlyWellCovered { .. })
    }

    /// Re-checks the witness against `g`. Positive verdicts without a
    /// witness are re-derived from the enumeration.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Certificate::WellCovered { common_size } => {
                let mis = enumerate_maximal_independent_sets(g);
                mis.is_pure() && mis.min_size == *common_size
            }
            Certificate::NotWellCovered { witness_small, witness_large } => {
                g.is_maximal_independent(*witness_small)
                    && g.is_maximal_independent(*witness_large)
                    && witness_small.len() != witness_large.len()
            }
            Certificate::UniformlyWellCovered { partition } => {
                partition.validate(g).is_ok()
                    && enumerate_maximal_independent_sets(g)
                        .sets
                        .iter()
                        .all(|m| partition.cliques().iter().all(|c| (*m & *c).len() == 1))
            }
            Certificate::NotUniform { reason: NonUniformReason::NoCoverExists } => {
                all_clique_covers(g).is_empty()
            }
            Certificate::NotUniform {
                reason: NonUniformReason::IndependentDominator { cover, clique_index, witness },
            } => {
                let Some(&clique) = cover.cliques().get(*clique_index) else {
                    return false;
                };
                cover.validate(g).is_ok()
                    && g.is_independent(*witness)
                    && witness.is_disjoint(clique)
                    && g.dominates(*witness, clique)
                    && lemma_search(g).is_err()
            }
        }
    }
}

/// Bron–Kerbosch with pivoting over a relation given as neighbor masks.
/// Reports every maximal set `R` whose members are pairwise related.
fn bron_kerbosch(rel: &[VertexSet], r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| ((p & rel[u]).len(), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    for v in p - rel[pivot] {
        bron_kerbosch(rel, r.with(v), p & rel[v], x & rel[v], out);
        p.remove(v);
        x.insert(v);
    }
}

/// Every maximal independent set, each once, sorted ascending by mask.
pub fn enumerate_maximal_independent_sets(g: &Graph) -> MisReport {
    let non_adjacent = g.complement();
    let mut sets = Vec::new();
    bron_kerbosch(non_adjacent.adjacency(), VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut sets);
    sets.sort_unstable();
    let min_size = sets.iter().map(|s| s.len()).min().unwrap_or(0);
    let max_size = sets.iter().map(|s| s.len()).max().unwrap_or(0);
    MisReport { sets, min_size, max_size }
}

/// Maximal cliques of `g`, computed as the maximal independent sets of the complement.
pub fn enumerate_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    enumerate_maximal_independent_sets(&g.complement()).sets
}

/// Well-covered verdict. On failure the witnesses are the first (by mask
/// order) smallest and largest maximal independent sets.
pub fn is_well_covered(g: &Graph) -> Certificate {
    certificate_from_mis(&enumerate_maximal_independent_sets(g))
}

pub(crate) fn certificate_from_mis(mis: &MisReport) -> Certificate {
    if mis.is_pure() {
        return Certificate::WellCovered { common_size: mis.min_size };
    }
    let pick = |size| *mis.sets.iter().find(|s| s.len() == size).expect("size occurs");
    Certificate::NotWellCovered { witness_small: pick(mis.min_size), witness_large: pick(mis.max_size) }
}

/// Exact-cover search over maximal cliques, branching on the lowest
/// uncovered vertex. `visit` sees each cover once (as an unordered set of
/// parts, listed by increasing minimum element); returning `false` stops
/// the search.
fn search_covers(
    cliques: &[VertexSet],
    all: VertexSet,
    max_parts: usize,
    covered: VertexSet,
    chosen: &mut Vec<VertexSet>,
    visit: &mut dyn FnMut(&[VertexSet]) -> bool,
) -> bool {
    let Some(v) = (all - covered).first() else {
        return visit(chosen);
    };
    if chosen.len() == max_parts {
        return true;
    }
    for &c in cliques {
        if c.contains(v) && c.is_disjoint(covered) {
            chosen.push(c);
            let keep_going = search_covers(cliques, all, max_parts, covered | c, chosen, visit);
            chosen.pop();
            if !keep_going {
                return false;
            }
        }
    }
    true
}

/// All covers of `V(G)` by exactly `s` pairwise disjoint maximal cliques.
pub fn find_clique_covers(g: &Graph, s: usize) -> Vec<CliqueCover> {
    let cliques = enumerate_maximal_cliques(g);
    let mut found = Vec::new();
    search_covers(&cliques, g.vertices(), s, VertexSet::EMPTY, &mut Vec::new(), &mut |parts| {
        if parts.len() == s {
            found.push(CliqueCover::from_parts_unchecked(parts.to_vec()));
        }
        true
    });
    found
}

/// All disjoint maximal-clique covers of any size, ordered by part count and
/// then by search order.
pub fn all_clique_covers(g: &Graph) -> Vec<CliqueCover> {
    let cliques = enumerate_maximal_cliques(g);
    let mut found = Vec::new();
    search_covers(&cliques, g.vertices(), g.n(), VertexSet::EMPTY, &mut Vec::new(), &mut |parts| {
        found.push(CliqueCover::from_parts_unchecked(parts.to_vec()));
        true
    });
    found.sort_by_key(|c| c.len());
    found
}

/// First cover passing the independent-domination condition on every part,
/// or the reason none does.
fn lemma_search(g: &Graph) -> std::result::Result<CliqueCover, NonUniformReason> {
    let covers = all_clique_covers(g);
    let mut first_failure = None;
    for cover in covers {
        let failure = cover.cliques().iter().enumerate().find_map(|(i, &c)| {
            has_independent_dominating_set_outside(g, c)
                .expect("cover parts are nonempty")
                .map(|witness| (i, witness))
        });
        match failure {
            None => return Ok(cover),
            Some((clique_index, witness)) => {
                if first_failure.is_none() {
                    first_failure =
                        Some(NonUniformReason::IndependentDominator { cover, clique_index, witness });
                }
            }
        }
    }
    Err(first_failure.unwrap_or(NonUniformReason::NoCoverExists))
}

/// Uniform well-coveredness decided by the clique-cover criterion: some
/// partition into disjoint maximal cliques such that no part is dominated
/// from outside by an independent set.
pub fn is_uniformly_well_covered(g: &Graph) -> Certificate {
    match lemma_search(g) {
        Ok(partition) => Certificate::UniformlyWellCovered { partition },
        Err(reason) => Certificate::NotUniform { reason },
    }
}

/// Uniform well-coveredness straight from the definition: the graph is
/// well-covered and some partition meets every maximal independent set in
/// exactly one vertex per part.
///
/// Only partitions into disjoint maximal cliques are searched; any
/// partition with the property has that shape (two vertices of one part
/// are adjacent, since otherwise a maximal independent set extending both
/// meets the part twice, and a vertex adjacent to a whole part extends to
/// a maximal independent set missing it).
pub fn uniform_partition_by_definition(g: &Graph, mis: &MisReport) -> Option<CliqueCover> {
    if !mis.is_pure() {
        return None;
    }
    find_clique_covers(g, mis.independence_number())
        .into_iter()
        .find(|cover| mis.sets.iter().all(|m| cover.cliques().iter().all(|&c| (*m & c).len() == 1)))
}

/// Minimal dominating sets by subset enumeration, sorted by mask.
pub fn enumerate_minimal_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_minimal_dominating_sets_with_limit(g, DEFAULT_DOMINATION_LIMIT)
}

pub fn enumerate_minimal_dominating_sets_with_limit(g: &Graph, limit: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > limit || n > 30 {
        return Err(Error::SizeLimit { n, limit: limit.min(30) });
    }
    let closed: Vec<u64> = (0..n).map(|v| g.closed_neighbors(v).bits()).collect();
    let all = g.vertices().bits();
    let dominated = |a: u64| {
        let mut reach = 0u64;
        let mut rest = a;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            reach |= closed[v];
            rest &= rest - 1;
        }
        reach == all
    };
    let mut out = Vec::new();
    for a in 1..=all {
        if !dominated(a) {
            continue;
        }
        let mut rest = a;
        let mut minimal = true;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if dominated(a & !bit) {
                minimal = false;
                break;
            }
            rest &= rest - 1;
        }
        if minimal {
            out.push(VertexSet::from_bits(a));
        }
    }
    Ok(out)
}

/// Minimum size of a dominating set.
pub fn domination_number(g: &Graph) -> Result<usize> {
    Ok(enumerate_minimal_dominating_sets(g)?.iter().map(|s| s.len()).min().unwrap_or(0))
}

/// All minimal dominating sets have the same size.
pub fn is_well_dominated(g: &Graph) -> Result<bool> {
    let sets = enumerate_minimal_dominating_sets(g)?;
    Ok(sets.windows(2).all(|w| w[0].len() == w[1].len()))
}
