//! Recognition criteria for graphs that admit a partition into disjoint
//! maximal cliques, each checked against the enumeration oracle.
//!
//! The central primitive is [`has_independent_dominating_set_outside`]: for a
//! clique `C` of a cover, an independent set outside `C` that dominates `C`
//! extends to a maximal independent set missing `C`, so the cover cannot be a
//! uniform partition. When no part admits such a set, every maximal
//! independent set meets every part exactly once.

use crate::enumeration::{
    certificate_from_mis, enumerate_maximal_cliques, enumerate_maximal_independent_sets,
    enumerate_minimal_dominating_sets, find_clique_covers, is_uniformly_well_covered,
    uniform_partition_by_definition, Certificate, MisReport,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{bipartite_matching, is_perfect_matching, maximum_matching};
use crate::partition::{CliqueCover, Partition};
use crate::vertex_set::VertexSet;

/// Finds an independent `A ⊆ V(G) ∖ c` such that every vertex of `c` has a
/// neighbor in `A`.
///
/// Outside vertices are decided in ascending order, include before exclude,
/// and the search stops as soon as `c` is dominated. A branch is cut when
/// some undominated vertex of `c` has no neighbor among the outside vertices
/// still available (undecided and not adjacent to `A`).
/// [`crate::algebra::linear_zero_divisor_witness`] walks the same tree, so the
/// two return identical witnesses on edge ideals.
pub fn has_independent_dominating_set_outside(g: &Graph, c: VertexSet) -> Result<Option<VertexSet>> {
    if c.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    g.check_set(c)?;
    let outside: Vec<usize> = (g.vertices() - c).iter().collect();
    Ok(dominator_search(g, c, &outside, 0, VertexSet::EMPTY, VertexSet::EMPTY))
}

fn dominator_search(
    g: &Graph,
    targets: VertexSet,
    outside: &[usize],
    next: usize,
    chosen: VertexSet,
    dominated: VertexSet,
) -> Option<VertexSet> {
    let undominated = targets - dominated;
    if undominated.is_empty() {
        return Some(chosen);
    }
    if next == outside.len() {
        return None;
    }
    let blocked = g.neighborhood(chosen);
    let available: VertexSet = outside[next..].iter().copied().filter(|&v| !blocked.contains(v)).collect();
    let reachable = g.neighborhood(available);
    if !undominated.is_subset(reachable) {
        return None;
    }
    let v = outside[next];
    if !blocked.contains(v) {
        let with_v = dominator_search(g, targets, outside, next + 1, chosen.with(v), dominated | g.neighbors(v));
        if with_v.is_some() {
            return with_v;
        }
    }
    dominator_search(g, targets, outside, next + 1, chosen, dominated)
}

/// A named condition evaluated by one of the equivalence checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// All maximal independent sets have equal size (enumeration oracle).
    WellCovered,
    /// Some partition meets every maximal independent set once per part.
    UniformlyWellCovered,
    /// No part of the cover is dominated from outside by an independent set.
    NoIndependentDominator,
    /// Every part's variable sum is a non-zero-divisor in the edge ring.
    ThetaRegular,
    /// Each part is a minimal dominating set of the complement and every
    /// minimal dominating set of the graph has size `s`.
    CoDomination,
    /// Well-covered and some maximal independent set has size `s`.
    WellCoveredOfSize,
    /// Well-covered and a cover by `s` disjoint maximal cliques exists.
    WellCoveredWithCover,
    /// The complement is `s`-partite with every class dominating it, and the
    /// graph is well-dominated with domination number `s`.
    WellDominated,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::WellCovered => "well_covered",
            Condition::UniformlyWellCovered => "uniformly_well_covered",
            Condition::NoIndependentDominator => "no_independent_dominator",
            Condition::ThetaRegular => "theta_regular",
            Condition::CoDomination => "co_domination",
            Condition::WellCoveredOfSize => "well_covered_of_size",
            Condition::WellCoveredWithCover => "well_covered_with_cover",
            Condition::WellDominated => "well_dominated",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        [
            Condition::WellCovered,
            Condition::UniformlyWellCovered,
            Condition::NoIndependentDominator,
            Condition::ThetaRegular,
            Condition::CoDomination,
            Condition::WellCoveredOfSize,
            Condition::WellCoveredWithCover,
            Condition::WellDominated,
        ]
        .into_iter()
        .find(|c| c.label() == label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub condition: Condition,
    pub holds: bool,
}

/// Evidence attached to a failed condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Two maximal independent sets of different sizes.
    UnequalMis { small: VertexSet, large: VertexSet },
    /// An independent set outside part `clique_index` dominating it.
    IndependentDominator { clique_index: usize, set: VertexSet },
    /// A nonzero square-free monomial (by support) annihilating part
    /// `clique_index`'s variable sum.
    Annihilator { clique_index: usize, support: VertexSet },
    /// A minimal dominating set whose size differs from `s`.
    DominatingSetSize { set: VertexSet },
    /// A part that is not a minimal dominating set of the complement.
    PartNotCoDominating { part_index: usize },
}

/// Verdicts of several routes that are supposed to agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// False when the preconditions of the equivalence are not met; then
    /// `verdicts` is empty.
    pub applicable: bool,
    pub s: Option<usize>,
    /// The cover or partition the verdicts refer to; witness part indices point into it.
    pub partition: Option<Partition>,
    pub verdicts: Vec<Verdict>,
    pub agree: bool,
    pub witnesses: Vec<Witness>,
}

impl EquivalenceReport {
    fn inapplicable() -> Self {
        EquivalenceReport { applicable: false, s: None, partition: None, verdicts: Vec::new(), agree: true, witnesses: Vec::new() }
    }

    fn new(s: usize, partition: Partition, verdicts: Vec<Verdict>, witnesses: Vec<Witness>) -> Self {
        let agree = verdicts.windows(2).all(|w| w[0].holds == w[1].holds);
        EquivalenceReport { applicable: true, s: Some(s), partition: Some(partition), verdicts, agree, witnesses }
    }

    pub fn verdict(&self, condition: Condition) -> Option<bool> {
        self.verdicts.iter().find(|v| v.condition == condition).map(|v| v.holds)
    }

    /// The common verdict when all routes agree.
    pub fn consensus(&self) -> Option<bool> {
        (self.applicable && self.agree).then(|| self.verdicts.first().map(|v| v.holds)).flatten()
    }

    /// Re-checks every witness against `g`.
    pub fn verify_witnesses(&self, g: &Graph) -> bool {
        self.witnesses.iter().all(|w| verify_witness(g, self.partition.as_ref(), self.s, w))
    }
}

pub(crate) fn verify_witness(g: &Graph, partition: Option<&Partition>, s: Option<usize>, w: &Witness) -> bool {
    match *w {
        Witness::UnequalMis { small, large } => {
            g.is_maximal_independent(small) && g.is_maximal_independent(large) && small.len() != large.len()
        }
        Witness::IndependentDominator { clique_index, set } | Witness::Annihilator { clique_index, support: set } => {
            let Some(&part) = partition.and_then(|p| p.parts().get(clique_index)) else {
                return false;
            };
            g.check_set(set).is_ok() && g.is_independent(set) && set.is_disjoint(part) && g.dominates(set, part)
        }
        Witness::DominatingSetSize { set } => {
            g.check_set(set).is_ok() && g.is_minimal_dominating_set(set) && Some(set.len()) != s
        }
        Witness::PartNotCoDominating { part_index } => {
            let Some(&part) = partition.and_then(|p| p.parts().get(part_index)) else {
                return false;
            };
            !g.complement().is_minimal_dominating_set(part)
        }
    }
}

fn well_covered_verdict(mis: &MisReport, witnesses: &mut Vec<Witness>) -> bool {
    match certificate_from_mis(mis) {
        Certificate::NotWellCovered { witness_small, witness_large } => {
            witnesses.push(Witness::UnequalMis { small: witness_small, large: witness_large });
            false
        }
        _ => true,
    }
}

/// First part (with its witness) dominated from outside by an independent set.
pub fn first_independent_dominator(g: &Graph, cover: &CliqueCover) -> Option<(usize, VertexSet)> {
    cover.cliques().iter().enumerate().find_map(|(i, &c)| {
        has_independent_dominating_set_outside(g, c).expect("cover parts are nonempty").map(|w| (i, w))
    })
}

/// For a cover by `s` disjoint maximal cliques where `s` is the size of
/// some maximal independent set: well-covered, uniformly well-covered and
/// "no part is dominated from outside by an independent set" coincide.
/// Evaluates all three independently.
pub fn check_cover_equivalence(g: &Graph, cover: &CliqueCover) -> Result<EquivalenceReport> {
    cover.validate(g)?;
    let mis = enumerate_maximal_independent_sets(g);
    let s = cover.len();
    if !mis.has_size(s) {
        return Err(Error::ClassCondition { s });
    }
    let mut witnesses = Vec::new();
    let well_covered = well_covered_verdict(&mis, &mut witnesses);
    let uniform = uniform_partition_by_definition(g, &mis).is_some();
    let dominator = first_independent_dominator(g, cover);
    if let Some((clique_index, set)) = dominator {
        witnesses.push(Witness::IndependentDominator { clique_index, set });
    }
    let verdicts = vec![
        Verdict { condition: Condition::WellCovered, holds: well_covered },
        Verdict { condition: Condition::UniformlyWellCovered, holds: uniform },
        Verdict { condition: Condition::NoIndependentDominator, holds: dominator.is_none() },
    ];
    Ok(EquivalenceReport::new(s, cover.to_partition(), verdicts, witnesses))
}

/// For a partition of `V(G)` into `s` cliques (so the complement is
/// `s`-partite with these classes), compares the domination criterion,
/// uniform well-coveredness, and well-coveredness with independence number `s`.
pub fn check_co_partition_equivalence(g: &Graph, p: &Partition) -> Result<EquivalenceReport> {
    if p.parts().iter().any(|&part| !part.is_subset(g.vertices())) || p.parts().iter().map(|x| x.len()).sum::<usize>() != g.n() {
        return Err(Error::InvalidPartition("partition does not match the graph's vertex set".into()));
    }
    if let Some(bad) = p.parts().iter().find(|&&part| !g.is_clique(part)) {
        return Err(Error::InvalidPartition(format!("{{{}}} is not a clique", bad.to_labels())));
    }
    let s = p.len();
    let dominating_sets = enumerate_minimal_dominating_sets(g)?;
    let complement = g.complement();
    let mut witnesses = Vec::new();

    let mut co_domination = true;
    if let Some(part_index) = p.parts().iter().position(|&part| !complement.is_minimal_dominating_set(part)) {
        co_domination = false;
        witnesses.push(Witness::PartNotCoDominating { part_index });
    }
    if let Some(&set) = dominating_sets.iter().find(|d| d.len() != s) {
        co_domination = false;
        witnesses.push(Witness::DominatingSetSize { set });
    }

    let uniform = is_uniformly_well_covered(g).holds();
    let mis = enumerate_maximal_independent_sets(g);
    let well_covered_of_size = well_covered_verdict(&mis, &mut witnesses) && mis.has_size(s);

    let verdicts = vec![
        Verdict { condition: Condition::CoDomination, holds: co_domination },
        Verdict { condition: Condition::UniformlyWellCovered, holds: uniform },
        Verdict { condition: Condition::WellCoveredOfSize, holds: well_covered_of_size },
    ];
    Ok(EquivalenceReport::new(s, p.clone(), verdicts, witnesses))
}

/// The four-way equivalence for a graph whose independence number `s`
/// admits a cover by `s` disjoint maximal cliques. Reports
/// `applicable = false` when no such cover exists.
pub fn check_full_equivalence(g: &Graph) -> Result<EquivalenceReport> {
    let mis = enumerate_maximal_independent_sets(g);
    let s = mis.independence_number();
    let covers = find_clique_covers(g, s);
    let Some(first) = covers.first() else {
        return Ok(EquivalenceReport::inapplicable());
    };
    let mut witnesses = Vec::new();

    let well_covered = well_covered_verdict(&mis, &mut witnesses);

    let complement = g.complement();
    let co_partite = covers
        .iter()
        .any(|c| c.cliques().iter().all(|&part| complement.is_dominating_set(part)));
    let dominating_sets = enumerate_minimal_dominating_sets(g)?;
    let gamma = dominating_sets.iter().map(|d| d.len()).min().unwrap_or(0);
    let well_dominated = dominating_sets.iter().all(|d| d.len() == gamma);
    if let Some(&set) = dominating_sets.iter().find(|d| d.len() != s) {
        witnesses.push(Witness::DominatingSetSize { set });
    }

    let passing_cover = covers.iter().find(|c| first_independent_dominator(g, c).is_none());
    if passing_cover.is_none() {
        if let Some((clique_index, set)) = first_independent_dominator(g, first) {
            witnesses.push(Witness::IndependentDominator { clique_index, set });
        }
    }
    let uniform = uniform_partition_by_definition(g, &mis).is_some();

    let verdicts = vec![
        Verdict { condition: Condition::WellCoveredWithCover, holds: well_covered },
        Verdict { condition: Condition::WellDominated, holds: co_partite && well_dominated && gamma == s },
        Verdict { condition: Condition::NoIndependentDominator, holds: passing_cover.is_some() },
        Verdict { condition: Condition::UniformlyWellCovered, holds: uniform },
    ];
    let cover = passing_cover.unwrap_or(first);
    Ok(EquivalenceReport::new(s, cover.to_partition(), verdicts, witnesses))
}

/// A perfect matching between parts `pair.0` and `pair.1` of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingCertificate {
    pub pair: (usize, usize),
    pub edges: Vec<(usize, usize)>,
}

impl MatchingCertificate {
    pub fn verify(&self, g: &Graph, p: &Partition) -> bool {
        let (i, j) = self.pair;
        match (p.parts().get(i), p.parts().get(j)) {
            (Some(&left), Some(&right)) if i != j => is_perfect_matching(g, left, right, &self.edges),
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartMatchingReport {
    pub applicable: bool,
    /// Which precondition failed, when not applicable.
    pub reason: Option<String>,
    pub part_sizes: Vec<usize>,
    pub equal_sizes: bool,
    pub matchings: Vec<MatchingCertificate>,
    /// Part pairs without a perfect matching.
    pub unmatched: Vec<(usize, usize)>,
}

impl PartMatchingReport {
    pub fn holds(&self) -> bool {
        self.applicable && self.equal_sizes && self.unmatched.is_empty()
    }
}

/// Checks the hypotheses "`p` is an `s`-partition into independent sets,
/// every maximal clique has size `s`, and `g` is well-covered"; when they
/// hold, reports part sizes and a perfect matching for every pair of parts.
pub fn verify_part_matchings(g: &Graph, p: &Partition) -> PartMatchingReport {
    let part_sizes: Vec<usize> = p.parts().iter().map(|x| x.len()).collect();
    let inapplicable = |reason: &str| PartMatchingReport {
        applicable: false,
        reason: Some(reason.to_string()),
        part_sizes: part_sizes.clone(),
        equal_sizes: false,
        matchings: Vec::new(),
        unmatched: Vec::new(),
    };
    let covered: VertexSet = p.parts().iter().fold(VertexSet::EMPTY, |acc, &x| acc | x);
    if covered != g.vertices() || !g.is_partition_into_independent_sets(p) {
        return inapplicable("not an s-partition into independent sets");
    }
    let s = p.len();
    if enumerate_maximal_cliques(g).iter().any(|c| c.len() != s) {
        return inapplicable("some maximal clique does not have size s");
    }
    if !enumerate_maximal_independent_sets(g).is_pure() {
        return inapplicable("not well-covered");
    }
    let equal_sizes = part_sizes.windows(2).all(|w| w[0] == w[1]);
    let mut matchings = Vec::new();
    let mut unmatched = Vec::new();
    for i in 0..s {
        for j in i + 1..s {
            match bipartite_matching(g, p.parts()[i], p.parts()[j]).expect("parts are disjoint") {
                Some(edges) => matchings.push(MatchingCertificate { pair: (i, j), edges }),
                None => unmatched.push((i, j)),
            }
        }
    }
    PartMatchingReport { applicable: true, reason: None, part_sizes, equal_sizes, matchings, unmatched }
}

/// Where the bipartite criterion failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RavindraFailure {
    /// The maximum matching found is not perfect.
    NoPerfectMatching,
    /// For matched edge `edge`, `pair.0 ∈ N(x)∖{y}` and `pair.1 ∈ N(y)∖{x}` are not adjacent.
    NotCompleteBipartite { edge: (usize, usize), pair: (usize, usize) },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RavindraReport {
    pub applicable: bool,
    pub holds: bool,
    pub matching: Vec<(usize, usize)>,
    pub failure: Option<RavindraFailure>,
}

/// Well-coveredness of a bipartite graph without isolated vertices: a
/// perfect matching exists and for every matched edge `xy`, every neighbor
/// of `x` is adjacent to every neighbor of `y` (so `N[{x,y}]` induces a
/// complete bipartite graph). The condition is checked on the first maximum
/// matching found.
pub fn ravindra_check(g: &Graph) -> RavindraReport {
    let Some((left, right)) = g.bipartition() else {
        return RavindraReport { applicable: false, holds: false, matching: Vec::new(), failure: None };
    };
    if g.has_isolated_vertex() {
        return RavindraReport { applicable: false, holds: false, matching: Vec::new(), failure: None };
    }
    let matching = maximum_matching(g, left, right).expect("color classes are disjoint");
    if 2 * matching.len() != g.n() {
        return RavindraReport { applicable: true, holds: false, matching, failure: Some(RavindraFailure::NoPerfectMatching) };
    }
    for &(x, y) in &matching {
        for a in g.neighbors(x).without(y) {
            for b in g.neighbors(y).without(x) {
                if !g.has_edge(a, b) {
                    let failure = RavindraFailure::NotCompleteBipartite { edge: (x, y), pair: (a, b) };
                    return RavindraReport { applicable: true, holds: false, matching, failure: Some(failure) };
                }
            }
        }
    }
    RavindraReport { applicable: true, holds: true, matching, failure: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn set(labels: &[usize]) -> VertexSet {
        labels.iter().map(|l| l - 1).collect()
    }

    #[test]
    fn dominator_examples() {
        assert_eq!(has_independent_dominating_set_outside(&cycle(6), set(&[1, 2])).unwrap(), Some(set(&[3, 6])));
        assert_eq!(has_independent_dominating_set_outside(&uniformly_well_covered(), set(&[1, 5, 6])).unwrap(), None);
        assert_eq!(has_independent_dominating_set_outside(&path(4), set(&[1, 2])).unwrap(), None);
        assert_eq!(has_independent_dominating_set_outside(&path(4), VertexSet::EMPTY), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn dominator_search_matches_brute_force() {
        for g in [mixed_mis_sizes(), well_covered_nonuniform(), coverless_well_covered(), cycle(7), path(6)] {
            for c in enumerate_maximal_cliques(&g) {
                let brute = (0..1u64 << g.n())
                    .map(VertexSet::from_bits)
                    .any(|a| a.is_disjoint(c) && g.is_independent(a) && g.dominates(a, c));
                let found = has_independent_dominating_set_outside(&g, c).unwrap();
                assert_eq!(found.is_some(), brute, "{g:?} {c:?}");
                if let Some(a) = found {
                    assert!(a.is_disjoint(c) && g.is_independent(a) && g.dominates(a, c));
                }
            }
        }
    }

    #[test]
    fn cover_equivalence_examples() {
        let gc = uniformly_well_covered();
        let r = check_cover_equivalence(&gc, &CliqueCover::from_labels(&gc, "1,5,6;2,3,4").unwrap()).unwrap();
        assert!(r.agree && r.consensus() == Some(true));

        let c6 = cycle(6);
        let r = check_cover_equivalence(&c6, &CliqueCover::from_labels(&c6, "1,2;3,4;5,6").unwrap()).unwrap();
        assert_eq!(r.consensus(), Some(false));
        assert!(r.witnesses.contains(&Witness::IndependentDominator { clique_index: 0, set: set(&[3, 6]) }));
        assert!(r.witnesses.contains(&Witness::UnequalMis { small: set(&[1, 4]), large: set(&[1, 3, 5]) }));
        assert!(r.verify_witnesses(&c6));

        let c4 = cycle(4);
        let r = check_cover_equivalence(&c4, &CliqueCover::from_labels(&c4, "1,2;3,4").unwrap()).unwrap();
        assert_eq!(r.consensus(), Some(true));
    }

    #[test]
    fn cover_equivalence_rejects_invalid_input() {
        let gc = uniformly_well_covered();
        assert!(matches!(
            check_cover_equivalence(&gc, &CliqueCover::from_parts_unchecked(vec![set(&[1, 2]), set(&[3, 4, 5, 6])])),
            Err(Error::InvalidCover(_))
        ));
        // A cover with more parts than the independence number exists among
        // the 6-vertex graphs; each must be rejected.
        let pairs: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        let mut rejected = 0;
        for mask in 0..1u32 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(6, &edges).unwrap();
            let alpha = enumerate_maximal_independent_sets(&g).independence_number();
            for s in alpha + 1..=6 {
                for cover in find_clique_covers(&g, s) {
                    assert_eq!(check_cover_equivalence(&g, &cover), Err(Error::ClassCondition { s }));
                    rejected += 1;
                }
            }
            if rejected > 0 {
                break;
            }
        }
        assert!(rejected > 0);
    }

    #[test]
    fn co_partition_examples() {
        let gc = uniformly_well_covered();
        let r = check_co_partition_equivalence(&gc, &Partition::from_labels(6, "1,5,6;2,3,4").unwrap()).unwrap();
        assert_eq!(r.consensus(), Some(true));

        let ga = mixed_mis_sizes();
        let r = check_co_partition_equivalence(&ga, &Partition::from_labels(6, "1,2;3,4;5,6").unwrap()).unwrap();
        assert_eq!(r.consensus(), Some(false));
        assert!(r.verify_witnesses(&ga));

        let k2 = complete(2);
        let r = check_co_partition_equivalence(&k2, &Partition::from_labels(2, "1,2").unwrap()).unwrap();
        assert_eq!(r.consensus(), Some(true));

        assert!(check_co_partition_equivalence(&ga, &Partition::from_labels(6, "1,3;2,4;5,6").unwrap()).is_err());
    }

    #[test]
    fn full_equivalence_examples() {
        let r = check_full_equivalence(&uniformly_well_covered()).unwrap();
        assert!(r.applicable);
        assert_eq!(r.verdicts.len(), 4);
        assert_eq!(r.consensus(), Some(true));

        let r = check_full_equivalence(&cycle(6)).unwrap();
        assert!(r.applicable);
        assert_eq!(r.s, Some(3));
        assert_eq!(r.consensus(), Some(false));
        assert!(r.verify_witnesses(&cycle(6)));

        assert!(!check_full_equivalence(&coverless_well_covered()).unwrap().applicable);
    }

    #[test]
    fn part_matching_examples() {
        let octahedron = complete_multipartite(&[2, 2, 2]);
        let p = Partition::from_sizes(&[2, 2, 2]).unwrap();
        let r = verify_part_matchings(&octahedron, &p);
        assert!(r.holds());
        assert_eq!(r.part_sizes, vec![2, 2, 2]);
        assert_eq!(r.matchings.len(), 3);
        assert!(r.matchings.iter().all(|m| m.verify(&octahedron, &p)));

        let c4 = cycle(4);
        let r = verify_part_matchings(&c4, &Partition::from_labels(4, "1,3;2,4").unwrap());
        assert!(r.holds());

        let gd = coverless_well_covered();
        let r = verify_part_matchings(&gd, &Partition::from_labels(6, "1,4;2,5;3,6").unwrap());
        assert!(!r.applicable);
        assert_eq!(r.reason.as_deref(), Some("some maximal clique does not have size s"));
    }

    #[test]
    fn ravindra_examples() {
        let r = ravindra_check(&path(4));
        assert!(r.applicable && r.holds);
        assert_eq!(r.matching, vec![(0, 1), (2, 3)]);

        let r = ravindra_check(&cycle(6));
        assert!(r.applicable && !r.holds);
        assert_eq!(r.failure, Some(RavindraFailure::NotCompleteBipartite { edge: (0, 1), pair: (5, 2) }));

        assert!(ravindra_check(&cycle(4)).holds);
        assert!(!ravindra_check(&cycle(5)).applicable);
        assert!(!ravindra_check(&Graph::empty(2).unwrap()).applicable);
    }
}
