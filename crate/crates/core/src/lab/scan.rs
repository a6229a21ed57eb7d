use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::generator::GeneratorConfig;
use crate::certify::{certify_with_cover, Route};
use crate::enumeration::{
    enumerate_maximal_cliques, enumerate_maximal_independent_sets, find_clique_covers, is_uniformly_well_covered,
    is_well_covered, Certificate, DEFAULT_DOMINATION_LIMIT,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{CliqueCover, Partition};
use crate::recognition::{
    check_co_partition_equivalence, check_cover_equivalence, check_full_equivalence, ravindra_check,
    verify_part_matchings,
};
use crate::vertex_set::VertexSet;

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(5);

/// At most this many counterexamples are kept per report; tallies count all.
pub const COUNTEREXAMPLE_LIMIT: usize = 100;

const CHUNK: u64 = 4096;

/// A property evaluated on every applicable instance of a scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Qualifying `s`-partite instances are uniformly well-covered.
    ConjectureUniformity,
    /// The four-way equivalence on graphs with a cover of size `α`.
    FullEquivalence,
    /// Oracle, uniformity and domination agree on every cover of size `α`.
    CoverEquivalence,
    /// Oracle, domination and zero-divisor routes agree on every cover of
    /// size `α`, with identical witnesses.
    RouteAgreement,
    /// Domination in the complement agrees with uniformity on every cover of size `α`.
    CoPartitionEquivalence,
    /// The bipartite matching criterion agrees with the oracle.
    BipartiteCriterion,
    /// Qualifying `s`-partite instances have equal parts and pairwise perfect matchings.
    PartMatchings,
}

impl Check {
    /// Every check run by [`theorem_corpus_check`] by default.
    pub const THEOREMS: [Check; 6] = [
        Check::FullEquivalence,
        Check::CoverEquivalence,
        Check::RouteAgreement,
        Check::CoPartitionEquivalence,
        Check::BipartiteCriterion,
        Check::PartMatchings,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Check::ConjectureUniformity => "conjecture_uniformity",
            Check::FullEquivalence => "full_equivalence",
            Check::CoverEquivalence => "cover_equivalence",
            Check::RouteAgreement => "route_agreement",
            Check::CoPartitionEquivalence => "co_partition_equivalence",
            Check::BipartiteCriterion => "bipartite_criterion",
            Check::PartMatchings => "part_matchings",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        std::iter::once(Check::ConjectureUniformity).chain(Check::THEOREMS).find(|c| c.label() == label)
    }

    fn needs_domination(self) -> bool {
        matches!(self, Check::FullEquivalence | Check::CoPartitionEquivalence)
    }

    /// Re-runs the check on a recorded instance; true when the failure recurs.
    /// Checks tied to a cover or partition need it in `partition`.
    pub fn reproduces(self, g: &Graph, partition: Option<&Partition>) -> bool {
        let cover = || partition.and_then(|p| CliqueCover::new(g, p.parts().to_vec()).ok());
        match self {
            Check::ConjectureUniformity => {
                partition.is_some_and(|p| qualifies_for_conjecture(g, p)) && !is_uniformly_well_covered(g).holds()
            }
            Check::FullEquivalence => {
                check_full_equivalence(g).is_ok_and(|r| r.applicable && (!r.agree || !r.verify_witnesses(g)))
            }
            Check::CoverEquivalence => cover()
                .and_then(|c| check_cover_equivalence(g, &c).ok())
                .is_some_and(|r| !r.agree || !r.verify_witnesses(g)),
            Check::RouteAgreement => cover()
                .and_then(|c| certify_with_cover(g, &c, &Route::ALL).ok())
                .is_some_and(|r| !r.consistent() || !r.equivalence.verify_witnesses(g)),
            Check::CoPartitionEquivalence => partition
                .and_then(|p| check_co_partition_equivalence(g, p).ok())
                .is_some_and(|r| !r.agree || !r.verify_witnesses(g)),
            Check::BipartiteCriterion => {
                let r = ravindra_check(g);
                r.applicable && r.holds != is_well_covered(g).holds()
            }
            Check::PartMatchings => partition.is_some_and(|p| {
                let r = verify_part_matchings(g, p);
                r.applicable && !r.holds()
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
}

/// A failed check on one instance. The graph (and partition, if any) are
/// enough to reproduce it with [`Check::reproduces`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub index: u64,
    pub check: Check,
    pub graph: Graph,
    pub partition: Option<Partition>,
    /// Certificate of non-uniformity, for conjecture counterexamples.
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanKind {
    Conjecture,
    Theorems,
}

impl ScanKind {
    pub fn label(self) -> &'static str {
        match self {
            ScanKind::Conjecture => "conjecture",
            ScanKind::Theorems => "theorems",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanReport {
    pub kind: ScanKind,
    pub config: GeneratorConfig,
    pub checks: Vec<Check>,
    pub examined: u64,
    /// Conjecture scans: instances qualifying with their generating
    /// partition. Theorem scans: instances on which some check applied.
    pub qualifying: u64,
    /// Conjecture scans in exhaustive modes: instances qualifying with some
    /// `s`-partition.
    pub qualifying_any_partition: Option<u64>,
    pub timed_out: u64,
    pub tallies: BTreeMap<Check, Tally>,
    pub counterexamples: Vec<Counterexample>,
    pub counterexamples_total: u64,
    pub wall_time: Duration,
}

impl ScanReport {
    /// Every recorded counterexample fails again when re-run from its graph.
    pub fn counterexamples_reproduce(&self) -> bool {
        self.counterexamples.iter().all(|c| c.check.reproduces(&c.graph, c.partition.as_ref()))
    }

    pub fn failures(&self) -> u64 {
        self.tallies.values().map(|t| t.fail).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    /// Per-instance budget, checked between stages.
    pub timeout: Duration,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { timeout: DEFAULT_TIMEOUT }
    }
}

/// `p` splits `g` into `s` independent sets, every maximal clique of `g` has
/// exactly `s` vertices, and `g` is well-covered.
pub fn qualifies_for_conjecture(g: &Graph, p: &Partition) -> bool {
    let covered = p.parts().iter().fold(VertexSet::EMPTY, |acc, &x| acc | x);
    covered == g.vertices()
        && g.is_partition_into_independent_sets(p)
        && enumerate_maximal_cliques(g).iter().all(|c| c.len() == p.len())
        && enumerate_maximal_independent_sets(g).is_pure()
}

/// A partition of `g` into exactly `s` nonempty independent sets, found by
/// coloring vertices in order with the lowest admissible color.
pub fn find_independent_partition(g: &Graph, s: usize) -> Option<Partition> {
    if s == 0 || s > g.n() {
        return None;
    }
    let mut classes = vec![VertexSet::EMPTY; s];
    if color(g, 0, &mut classes) {
        Some(Partition::new(g.n(), classes).expect("coloring covers every vertex with nonempty classes"))
    } else {
        None
    }
}

fn color(g: &Graph, v: usize, classes: &mut [VertexSet]) -> bool {
    let used = classes.iter().filter(|c| !c.is_empty()).count();
    if v == g.n() {
        return used == classes.len();
    }
    if classes.len() - used > g.n() - v {
        return false;
    }
    for k in 0..classes.len().min(used + 1) {
        if classes[k].is_disjoint(g.neighbors(v)) {
            classes[k].insert(v);
            if color(g, v + 1, classes) {
                return true;
            }
            classes[k].remove(v);
        }
    }
    false
}

/// Common size of all maximal cliques, if they share one.
fn uniform_clique_size(g: &Graph) -> Option<usize> {
    let cliques = enumerate_maximal_cliques(g);
    let first = cliques.first()?.len();
    cliques.iter().all(|c| c.len() == first).then_some(first)
}

#[derive(Default)]
struct Outcome {
    timed_out: bool,
    qualifying: bool,
    qualifying_any: bool,
    results: Vec<(Check, bool)>,
    counterexamples: Vec<Counterexample>,
}

struct Clock {
    start: Instant,
    budget: Duration,
}

impl Clock {
    fn expired(&self) -> bool {
        self.start.elapsed() > self.budget
    }
}

fn conjecture_instance(config: &GeneratorConfig, index: u64, options: &ScanOptions) -> Outcome {
    let clock = Clock { start: Instant::now(), budget: options.timeout };
    let g = config.instance(index).expect("index below count");
    let mut out = Outcome::default();
    let generating = config.generating_partition();
    out.qualifying = generating.as_ref().is_some_and(|p| qualifies_for_conjecture(&g, p));
    if clock.expired() {
        out.timed_out = true;
        return out;
    }
    let mut partition = generating.filter(|_| out.qualifying);
    if config.mode().is_exhaustive() {
        if out.qualifying {
            out.qualifying_any = true;
        } else if let Some(s) = config.s().or_else(|| uniform_clique_size(&g)) {
            partition = find_independent_partition(&g, s).filter(|p| qualifies_for_conjecture(&g, p));
            out.qualifying_any = partition.is_some();
        }
        if clock.expired() {
            out.timed_out = true;
            return out;
        }
    }
    let Some(partition) = partition else {
        return out;
    };
    let certificate = is_uniformly_well_covered(&g);
    if clock.expired() {
        out.timed_out = true;
        return out;
    }
    let holds = certificate.holds();
    out.results.push((Check::ConjectureUniformity, holds));
    if !holds {
        out.counterexamples.push(Counterexample {
            index,
            check: Check::ConjectureUniformity,
            graph: g,
            partition: Some(partition),
            certificate: Some(certificate),
        });
    }
    out
}

fn theorem_instance(config: &GeneratorConfig, index: u64, checks: &[Check], options: &ScanOptions) -> Outcome {
    let clock = Clock { start: Instant::now(), budget: options.timeout };
    let g = config.instance(index).expect("index below count");
    let mut out = Outcome::default();
    let record = |out: &mut Outcome, check: Check, ok: bool, partition: Option<Partition>| {
        out.results.push((check, ok));
        if !ok {
            out.counterexamples.push(Counterexample { index, check, graph: g.clone(), partition, certificate: None });
        }
    };
    let covers = std::cell::OnceCell::new();
    let covers = || covers.get_or_init(|| find_clique_covers(&g, enumerate_maximal_independent_sets(&g).independence_number()));
    for &check in checks {
        if clock.expired() {
            out.timed_out = true;
            return out;
        }
        match check {
            Check::ConjectureUniformity => {
                let partition = config.generating_partition().filter(|p| qualifies_for_conjecture(&g, p));
                if let Some(p) = partition {
                    let ok = is_uniformly_well_covered(&g).holds();
                    record(&mut out, check, ok, Some(p));
                }
            }
            Check::FullEquivalence => {
                let r = check_full_equivalence(&g).expect("vertex count checked against the domination limit");
                if r.applicable {
                    record(&mut out, check, r.agree && r.verify_witnesses(&g), None);
                }
            }
            Check::CoverEquivalence => {
                for cover in covers() {
                    let r = check_cover_equivalence(&g, cover).expect("covers of size alpha are in the class");
                    record(&mut out, check, r.agree && r.verify_witnesses(&g), Some(cover.to_partition()));
                }
            }
            Check::RouteAgreement => {
                for cover in covers() {
                    let r = certify_with_cover(&g, cover, &Route::ALL).expect("covers of size alpha are in the class");
                    let ok = r.consistent() && r.equivalence.verify_witnesses(&g);
                    record(&mut out, check, ok, Some(cover.to_partition()));
                }
            }
            Check::CoPartitionEquivalence => {
                for cover in covers() {
                    let p = cover.to_partition();
                    let r = check_co_partition_equivalence(&g, &p).expect("cover parts are cliques");
                    record(&mut out, check, r.agree && r.verify_witnesses(&g), Some(p));
                }
            }
            Check::BipartiteCriterion => {
                let r = ravindra_check(&g);
                if r.applicable {
                    record(&mut out, check, r.holds == is_well_covered(&g).holds(), None);
                }
            }
            Check::PartMatchings => {
                let partition = match config.generating_partition() {
                    Some(p) => Some(p),
                    None => uniform_clique_size(&g).and_then(|s| find_independent_partition(&g, s)),
                };
                if let Some(p) = partition.filter(|p| qualifies_for_conjecture(&g, p)) {
                    let ok = verify_part_matchings(&g, &p).holds();
                    record(&mut out, check, ok, Some(p));
                }
            }
        }
    }
    out.qualifying = !out.results.is_empty();
    out
}

fn run<F>(kind: ScanKind, config: &GeneratorConfig, checks: Vec<Check>, evaluate: F) -> ScanReport
where
    F: Fn(u64) -> Outcome + Sync,
{
    let start = Instant::now();
    let mut report = ScanReport {
        kind,
        config: config.clone(),
        tallies: checks.iter().map(|&c| (c, Tally::default())).collect(),
        checks,
        examined: 0,
        qualifying: 0,
        qualifying_any_partition: (kind == ScanKind::Conjecture && config.mode().is_exhaustive()).then_some(0),
        timed_out: 0,
        counterexamples: Vec::new(),
        counterexamples_total: 0,
        wall_time: Duration::ZERO,
    };
    let mut chunk_start = 0;
    while chunk_start < config.count() {
        let chunk_end = (chunk_start + CHUNK).min(config.count());
        let outcomes: Vec<Outcome> = (chunk_start..chunk_end).into_par_iter().map(&evaluate).collect();
        for outcome in outcomes {
            merge(&mut report, outcome);
        }
        chunk_start = chunk_end;
    }
    report.wall_time = start.elapsed();
    report
}

fn merge(report: &mut ScanReport, outcome: Outcome) {
    report.examined += 1;
    report.timed_out += u64::from(outcome.timed_out);
    report.qualifying += u64::from(outcome.qualifying);
    if let Some(any) = report.qualifying_any_partition.as_mut() {
        *any += u64::from(outcome.qualifying_any);
    }
    for (check, ok) in outcome.results {
        let tally = report.tallies.entry(check).or_default();
        if ok {
            tally.pass += 1;
        } else {
            tally.fail += 1;
        }
    }
    for c in outcome.counterexamples {
        report.counterexamples_total += 1;
        if report.counterexamples.len() < COUNTEREXAMPLE_LIMIT {
            report.counterexamples.push(c);
        }
    }
}

/// Scans the stream for `s`-partite, well-covered graphs whose maximal
/// cliques all have size `s` but which are not uniformly well-covered.
///
/// Each instance is tried with its generating partition; in exhaustive modes
/// an instance that fails with it (or has none) is also tried with the first
/// `s`-partition found by coloring, and the two counts are reported apart.
/// Uniformity itself does not depend on the partition.
pub fn conjecture_scan(config: &GeneratorConfig, options: &ScanOptions) -> ScanReport {
    run(ScanKind::Conjecture, config, vec![Check::ConjectureUniformity], |i| conjecture_instance(config, i, options))
}

/// Runs `checks` on every instance of the stream and tallies passes and
/// failures; every failure is kept as a reproducible counterexample.
pub fn theorem_corpus_check(config: &GeneratorConfig, checks: &[Check], options: &ScanOptions) -> Result<ScanReport> {
    if checks.iter().any(|c| c.needs_domination()) && config.n() > DEFAULT_DOMINATION_LIMIT {
        return Err(Error::SizeLimit { n: config.n(), limit: DEFAULT_DOMINATION_LIMIT });
    }
    let mut unique = Vec::new();
    for &c in checks {
        if !unique.contains(&c) {
            unique.push(c);
        }
    }
    let chosen = unique.clone();
    Ok(run(ScanKind::Theorems, config, unique, move |i| theorem_instance(config, i, &chosen, options)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::lab::generator::{ConfigRequest, Mode};

    fn spartite(parts: &[usize]) -> GeneratorConfig {
        GeneratorConfig::new(Mode::ExhaustiveSpartite, ConfigRequest { parts: parts.to_vec(), ..ConfigRequest::default() })
            .unwrap()
    }

    #[test]
    fn qualification_examples() {
        let octahedron = complete_multipartite(&[2, 2, 2]);
        assert!(qualifies_for_conjecture(&octahedron, &Partition::from_sizes(&[2, 2, 2]).unwrap()));
        let bip = |n| Partition::from_labels(n, if n == 6 { "1,3,5;2,4,6" } else { "1,3;2,4" }).unwrap();
        assert!(!qualifies_for_conjecture(&cycle(6), &bip(6)));
        assert!(qualifies_for_conjecture(&cycle(4), &bip(4)));
    }

    #[test]
    fn independent_partitions() {
        let p = find_independent_partition(&cycle(6), 2).unwrap();
        assert_eq!(p.to_labels(), "1,3,5;2,4,6");
        assert_eq!(find_independent_partition(&cycle(5), 2), None);
        assert_eq!(find_independent_partition(&complete(3), 3).unwrap().len(), 3);
        assert_eq!(find_independent_partition(&Graph::empty(3).unwrap(), 2).unwrap().to_labels(), "1,2;3");
    }

    #[test]
    fn small_conjecture_scans_are_clean() {
        let r = conjecture_scan(&spartite(&[2, 2]), &ScanOptions::default());
        assert_eq!(r.examined, 16);
        assert!(r.qualifying >= 1 && r.qualifying <= r.examined);
        assert_eq!(r.counterexamples_total, 0);
        assert!(r.qualifying_any_partition.unwrap() >= r.qualifying);

        let r = conjecture_scan(&spartite(&[2, 2, 2]), &ScanOptions::default());
        assert_eq!(r.examined, 1 << 12);
        assert_eq!(r.counterexamples_total, 0);
    }

    #[test]
    fn theorem_scan_on_small_labeled_graphs() {
        let config =
            GeneratorConfig::new(Mode::ExhaustiveLabeled, ConfigRequest { n: Some(5), ..ConfigRequest::default() })
                .unwrap();
        let r = theorem_corpus_check(&config, &Check::THEOREMS, &ScanOptions::default()).unwrap();
        assert_eq!(r.examined, 1024);
        assert_eq!(r.failures(), 0, "{:?}", r.counterexamples.first());
        assert!(r.tallies[&Check::RouteAgreement].pass > 0);
        assert!(r.tallies[&Check::BipartiteCriterion].pass > 0);
    }

    #[test]
    fn reproduction_detects_real_failures_only() {
        let c6 = cycle(6);
        let p = Partition::from_labels(6, "1,3,5;2,4,6").unwrap();
        assert!(!Check::ConjectureUniformity.reproduces(&c6, Some(&p)));
        assert!(!Check::RouteAgreement.reproduces(&c6, Some(&Partition::from_labels(6, "1,2;3,4;5,6").unwrap())));
        assert!(!Check::BipartiteCriterion.reproduces(&c6, None));
    }

    #[test]
    fn deterministic_modulo_wall_time() {
        let config = GeneratorConfig::new(
            Mode::RandomSpartite,
            ConfigRequest { parts: vec![2, 2, 2], p: Some(0.7), seed: 11, count: Some(300), ..ConfigRequest::default() },
        )
        .unwrap();
        let mut a = conjecture_scan(&config, &ScanOptions::default());
        let mut b = conjecture_scan(&config, &ScanOptions::default());
        a.wall_time = Duration::ZERO;
        b.wall_time = Duration::ZERO;
        assert_eq!(a, b);
    }
}
