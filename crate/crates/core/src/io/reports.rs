//! Builders turning checker results into [`ReportDocument`]s, and the
//! verifier that re-checks a document against the graph embedded in it.
//!
//! Vertex labels and part numbers in reports are 1-based.

use std::collections::BTreeMap;

use super::document::ReportDocument;
use super::formats::{parse_graph6, serialize_graph6};
use crate::algebra::{edge_ideal, linear_zero_divisor_witness, theta, theta_regularity_check, Polynomial, SquareFreeMonomial};
use crate::certify::{certify, RouteReport, Route};
use crate::enumeration::{
    enumerate_maximal_independent_sets, find_clique_covers, is_uniformly_well_covered, is_well_covered, Certificate,
    NonUniformReason,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lab::{Check, ScanReport, COUNTEREXAMPLE_LIMIT};
use crate::matching::maximum_matching;
use crate::partition::{CliqueCover, Partition};
use crate::recognition::{
    has_independent_dominating_set_outside, ravindra_check, verify_witness, RavindraFailure, RavindraReport, Witness,
};
use crate::vertex_set::VertexSet;

pub const TOOL_NAME: &str = "wellcover";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Maximal independent sets listed in a check report; larger families are
/// counted but not listed.
pub const MIS_LIST_LIMIT: usize = 1000;

fn header(doc: &mut ReportDocument, kind: &str) {
    doc.push("kind", kind);
    doc.push("tool.name", TOOL_NAME);
    doc.push("tool.version", TOOL_VERSION);
}

fn push_graph(doc: &mut ReportDocument, name: &str, g: &Graph) {
    doc.push("graph.name", name.replace(['\n', '\r'], " "));
    doc.push("graph.n", g.n());
    doc.push("graph.edges", g.edge_count());
    doc.push("graph.graph6", serialize_graph6(g));
}

fn pair_label((u, v): (usize, usize)) -> String {
    format!("{}-{}", u + 1, v + 1)
}

fn pairs_label(pairs: &[(usize, usize)]) -> String {
    pairs.iter().map(|&p| pair_label(p)).collect::<Vec<_>>().join(",")
}

fn parse_pair(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Report(format!("`{text}` is not a vertex pair"));
    let (u, v) = text.split_once('-').ok_or_else(bad)?;
    let u: usize = u.trim().parse().map_err(|_| bad())?;
    let v: usize = v.trim().parse().map_err(|_| bad())?;
    if u == 0 || v == 0 {
        return Err(bad());
    }
    Ok((u - 1, v - 1))
}

fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_pair).collect()
}

fn set_value(doc: &ReportDocument, key: &str) -> Result<VertexSet> {
    let raw = doc.require(key)?;
    VertexSet::from_labels(raw).ok_or_else(|| Error::Report(format!("`{key}` is not a vertex set: `{raw}`")))
}

fn part_value(doc: &ReportDocument, key: &str) -> Result<usize> {
    let part: usize = doc.value(key)?;
    part.checked_sub(1).ok_or_else(|| Error::Report(format!("`{key}` must be at least 1")))
}

fn bool_label(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn push_non_uniform(doc: &mut ReportDocument, prefix: &str, reason: &NonUniformReason) {
    match reason {
        NonUniformReason::NoCoverExists => doc.push(format!("{prefix}.reason"), "no_cover"),
        NonUniformReason::IndependentDominator { cover, clique_index, witness } => {
            doc.push(format!("{prefix}.reason"), "independent_dominator");
            doc.push(format!("{prefix}.cover"), cover.to_labels());
            doc.push(format!("{prefix}.part"), clique_index + 1);
            doc.push(format!("{prefix}.dominator"), witness.to_labels());
        }
    }
}

fn parse_non_uniform(doc: &ReportDocument, prefix: &str, g: &Graph) -> Result<NonUniformReason> {
    match doc.require(&format!("{prefix}.reason"))? {
        "no_cover" => Ok(NonUniformReason::NoCoverExists),
        "independent_dominator" => Ok(NonUniformReason::IndependentDominator {
            cover: CliqueCover::from_labels(g, doc.require(&format!("{prefix}.cover"))?)?,
            clique_index: part_value(doc, &format!("{prefix}.part"))?,
            witness: set_value(doc, &format!("{prefix}.dominator"))?,
        }),
        other => Err(Error::Report(format!("unknown non-uniformity reason `{other}`"))),
    }
}

/// Well-covered and uniformly well-covered verdicts with certificates and
/// the list of maximal independent sets.
pub fn check_report(name: &str, g: &Graph) -> ReportDocument {
    let mut doc = ReportDocument::new();
    header(&mut doc, "check");
    push_graph(&mut doc, name, g);
    let mis = enumerate_maximal_independent_sets(g);
    doc.push("mis.count", mis.sets.len());
    let listed = mis.sets.len().min(MIS_LIST_LIMIT);
    doc.push("mis.listed", listed);
    for (i, set) in mis.sets.iter().take(listed).enumerate() {
        doc.push(format!("mis.{}", i + 1), set.to_labels());
    }
    match is_well_covered(g) {
        Certificate::WellCovered { common_size } => {
            doc.push("well_covered", "true");
            doc.push("well_covered.size", common_size);
        }
        Certificate::NotWellCovered { witness_small, witness_large } => {
            doc.push("well_covered", "false");
            doc.push("well_covered.small", witness_small.to_labels());
            doc.push("well_covered.large", witness_large.to_labels());
        }
        _ => unreachable!("well-coveredness certificates"),
    }
    match is_uniformly_well_covered(g) {
        Certificate::UniformlyWellCovered { partition } => {
            doc.push("uniformly_well_covered", "true");
            doc.push("uniformly_well_covered.partition", partition.to_labels());
        }
        Certificate::NotUniform { reason } => {
            doc.push("uniformly_well_covered", "false");
            push_non_uniform(&mut doc, "uniformly_well_covered", &reason);
        }
        _ => unreachable!("uniformity certificates"),
    }
    doc
}

fn push_witness(doc: &mut ReportDocument, prefix: &str, w: &Witness) {
    match *w {
        Witness::UnequalMis { small, large } => {
            doc.push(format!("{prefix}.kind"), "unequal_mis");
            doc.push(format!("{prefix}.small"), small.to_labels());
            doc.push(format!("{prefix}.large"), large.to_labels());
        }
        Witness::IndependentDominator { clique_index, set } => {
            doc.push(format!("{prefix}.kind"), "independent_dominator");
            doc.push(format!("{prefix}.part"), clique_index + 1);
            doc.push(format!("{prefix}.set"), set.to_labels());
        }
        Witness::Annihilator { clique_index, support } => {
            doc.push(format!("{prefix}.kind"), "annihilator");
            doc.push(format!("{prefix}.part"), clique_index + 1);
            doc.push(format!("{prefix}.support"), support.to_labels());
            doc.push(format!("{prefix}.monomial"), SquareFreeMonomial::new(support));
        }
        Witness::DominatingSetSize { set } => {
            doc.push(format!("{prefix}.kind"), "dominating_set_size");
            doc.push(format!("{prefix}.set"), set.to_labels());
        }
        Witness::PartNotCoDominating { part_index } => {
            doc.push(format!("{prefix}.kind"), "part_not_co_dominating");
            doc.push(format!("{prefix}.part"), part_index + 1);
        }
    }
}

fn parse_witness(doc: &ReportDocument, prefix: &str) -> Result<Witness> {
    let key = |k: &str| format!("{prefix}.{k}");
    Ok(match doc.require(&key("kind"))? {
        "unequal_mis" => Witness::UnequalMis { small: set_value(doc, &key("small"))?, large: set_value(doc, &key("large"))? },
        "independent_dominator" => {
            Witness::IndependentDominator { clique_index: part_value(doc, &key("part"))?, set: set_value(doc, &key("set"))? }
        }
        "annihilator" => {
            Witness::Annihilator { clique_index: part_value(doc, &key("part"))?, support: set_value(doc, &key("support"))? }
        }
        "dominating_set_size" => Witness::DominatingSetSize { set: set_value(doc, &key("set"))? },
        "part_not_co_dominating" => Witness::PartNotCoDominating { part_index: part_value(doc, &key("part"))? },
        other => return Err(Error::Report(format!("unknown witness kind `{other}`"))),
    })
}

/// Runs the selected routes and renders their verdicts and witnesses.
pub fn certify_report(name: &str, g: &Graph, routes: &[Route]) -> Result<(ReportDocument, RouteReport)> {
    let report = certify(g, routes)?;
    let mut doc = ReportDocument::new();
    header(&mut doc, "certify");
    push_graph(&mut doc, name, g);
    let labels: Vec<&str> = routes.iter().map(|r| r.label()).collect();
    doc.push("routes", labels.join(","));
    let eq = &report.equivalence;
    doc.push("applicable", bool_label(eq.applicable));
    if let Some(s) = eq.s {
        doc.push("s", s);
    }
    if let Some(cover) = &report.cover {
        doc.push("cover", cover.to_labels());
    }
    for v in &eq.verdicts {
        let route = Route::ALL.into_iter().find(|r| r.condition() == v.condition).expect("route verdicts");
        doc.push(format!("verdict.{}", route.label()), bool_label(v.holds));
    }
    doc.push("agree", bool_label(eq.agree));
    doc.push("witnesses_agree", bool_label(report.witnesses_agree));
    doc.push("witness.count", eq.witnesses.len());
    for (i, w) in eq.witnesses.iter().enumerate() {
        push_witness(&mut doc, &format!("witness.{}", i + 1), w);
    }
    Ok((doc, report))
}

/// The variable sums of a cover's parts and an annihilating monomial for
/// each one that is a zero-divisor.
pub fn algebra_report(name: &str, g: &Graph, cover: &CliqueCover) -> Result<ReportDocument> {
    let report = theta_regularity_check(g, cover)?;
    let mut doc = ReportDocument::new();
    header(&mut doc, "algebra");
    push_graph(&mut doc, name, g);
    doc.push("cover", cover.to_labels());
    doc.push("ideal", edge_ideal(g));
    doc.push("theta.count", report.forms.len());
    for (i, form) in report.forms.iter().enumerate() {
        let prefix = format!("theta.{}", i + 1);
        doc.push(format!("{prefix}.form"), form);
        match report.witnesses.iter().find(|(j, _)| *j == i) {
            Some((_, m)) => {
                doc.push(format!("{prefix}.zero_divisor"), "true");
                doc.push(format!("{prefix}.annihilator"), m.support().to_labels());
                doc.push(format!("{prefix}.monomial"), m);
            }
            None => doc.push(format!("{prefix}.zero_divisor"), "false"),
        }
    }
    doc.push("theta_regular", bool_label(report.holds()));
    Ok(doc)
}

/// The bipartite matching criterion, set against the enumeration oracle.
pub fn bipartite_report(name: &str, g: &Graph) -> (ReportDocument, RavindraReport) {
    let report = ravindra_check(g);
    let mut doc = ReportDocument::new();
    header(&mut doc, "bipartite");
    push_graph(&mut doc, name, g);
    doc.push("applicable", bool_label(report.applicable));
    let oracle = is_well_covered(g).holds();
    if report.applicable {
        doc.push("matching", pairs_label(&report.matching));
        doc.push("holds", bool_label(report.holds));
        match &report.failure {
            Some(RavindraFailure::NoPerfectMatching) => doc.push("failure", "no_perfect_matching"),
            Some(RavindraFailure::NotCompleteBipartite { edge, pair }) => {
                doc.push("failure", "not_complete_bipartite");
                doc.push("failure.edge", pair_label(*edge));
                doc.push("failure.pair", pair_label(*pair));
            }
            None => {}
        }
    }
    doc.push("oracle.well_covered", bool_label(oracle));
    doc.push("agree", bool_label(!report.applicable || report.holds == oracle));
    (doc, report)
}

/// Renders a scan. Counterexamples carry their graph in graph6 so they can be
/// re-checked from the report alone.
pub fn scan_report(report: &ScanReport) -> ReportDocument {
    let mut doc = ReportDocument::new();
    header(&mut doc, "scan");
    doc.push("scan", report.kind.label());
    let c = &report.config;
    doc.push("config.mode", c.mode().label());
    doc.push("config.n", c.n());
    doc.push("config.s", c.s().map_or("none".to_string(), |s| s.to_string()));
    doc.push("config.parts", c.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","));
    if !c.mode().is_exhaustive() {
        doc.push("config.p", c.p());
    }
    doc.push("config.seed", c.seed());
    doc.push("config.count", c.count());
    doc.push("checks", report.checks.iter().map(|c| c.label()).collect::<Vec<_>>().join(","));
    doc.push("examined", report.examined);
    doc.push("qualifying", report.qualifying);
    if let Some(any) = report.qualifying_any_partition {
        doc.push("qualifying_any_partition", any);
    }
    doc.push("timed_out", report.timed_out);
    for (check, tally) in &report.tallies {
        doc.push(format!("tally.{}.pass", check.label()), tally.pass);
        doc.push(format!("tally.{}.fail", check.label()), tally.fail);
    }
    doc.push("counterexample.total", report.counterexamples_total);
    doc.push("counterexample.count", report.counterexamples.len());
    for (i, ce) in report.counterexamples.iter().enumerate() {
        let prefix = format!("counterexample.{}", i + 1);
        doc.push(format!("{prefix}.index"), ce.index);
        doc.push(format!("{prefix}.check"), ce.check.label());
        doc.push(format!("{prefix}.graph6"), serialize_graph6(&ce.graph));
        if let Some(p) = &ce.partition {
            doc.push(format!("{prefix}.partition"), p.to_labels());
        }
        if let Some(Certificate::NotUniform { reason }) = &ce.certificate {
            push_non_uniform(&mut doc, &format!("{prefix}.certificate"), reason);
        }
    }
    doc.push("wall_time_ms", report.wall_time.as_millis());
    doc
}

/// Outcome of re-checking a report.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verification {
    /// Number of individual claims re-checked.
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Verification {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn claim(&mut self, holds: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !holds {
            self.failures.push(what());
        }
    }
}

/// Re-checks every verdict and witness of a report produced by this crate.
/// Malformed documents are errors; claims that do not hold are collected in
/// the returned [`Verification`].
pub fn verify(doc: &ReportDocument) -> Result<Verification> {
    let mut v = Verification::default();
    match doc.require("kind")? {
        "check" => verify_check(doc, &mut v)?,
        "certify" => verify_certify(doc, &mut v)?,
        "algebra" => verify_algebra(doc, &mut v)?,
        "bipartite" => verify_bipartite(doc, &mut v)?,
        "scan" => verify_scan(doc, &mut v)?,
        other => return Err(Error::Report(format!("unknown report kind `{other}`"))),
    }
    Ok(v)
}

fn embedded_graph(doc: &ReportDocument, v: &mut Verification) -> Result<Graph> {
    let g = parse_graph6(doc.require("graph.graph6")?)?;
    let n: usize = doc.value("graph.n")?;
    v.claim(g.n() == n, || format!("graph.n = {n} but the embedded graph has {} vertices", g.n()));
    Ok(g)
}

fn verify_check(doc: &ReportDocument, v: &mut Verification) -> Result<()> {
    let g = embedded_graph(doc, v)?;
    let count: usize = doc.value("mis.count")?;
    let listed: usize = doc.value("mis.listed")?;
    let mut sets = Vec::with_capacity(listed);
    for i in 1..=listed {
        let set = set_value(doc, &format!("mis.{i}"))?;
        v.claim(g.check_set(set).is_ok() && g.is_maximal_independent(set), || {
            format!("mis.{i} = {{{}}} is not a maximal independent set", set.to_labels())
        });
        sets.push(set);
    }
    let mis = enumerate_maximal_independent_sets(&g);
    v.claim(mis.sets.len() == count, || format!("mis.count = {count} but there are {}", mis.sets.len()));
    if listed == count {
        sets.sort();
        v.claim(sets == mis.sets, || "listed maximal independent sets differ from the enumeration".into());
    }

    let well_covered: bool = doc.value("well_covered")?;
    let certificate = if well_covered {
        let Some(size) = doc.get("well_covered.size") else {
            v.claim(false, || "well_covered = true without well_covered.size".into());
            return Ok(());
        };
        let common_size = size.parse().map_err(|_| Error::Report(format!("`well_covered.size` has unexpected value `{size}`")))?;
        Certificate::WellCovered { common_size }
    } else {
        Certificate::NotWellCovered {
            witness_small: set_value(doc, "well_covered.small")?,
            witness_large: set_value(doc, "well_covered.large")?,
        }
    };
    v.claim(certificate.verify(&g), || format!("well-covered certificate does not verify: {certificate:?}"));

    let uniform: bool = doc.value("uniformly_well_covered")?;
    let certificate = if uniform {
        let partition = CliqueCover::from_labels(&g, doc.require("uniformly_well_covered.partition")?);
        match partition {
            Ok(partition) => Certificate::UniformlyWellCovered { partition },
            Err(e) => {
                v.claim(false, || format!("uniform partition is invalid: {e}"));
                return Ok(());
            }
        }
    } else {
        match parse_non_uniform(doc, "uniformly_well_covered", &g) {
            Ok(reason) => Certificate::NotUniform { reason },
            Err(e @ Error::Report(_)) => return Err(e),
            Err(e) => {
                v.claim(false, || format!("non-uniformity certificate is invalid: {e}"));
                return Ok(());
            }
        }
    };
    v.claim(certificate.verify(&g), || format!("uniformity certificate does not verify: {certificate:?}"));
    Ok(())
}

/// `m · θ_i = 0` in the edge ring and `m ≠ 0`, checked by polynomial arithmetic.
fn annihilates_theta(g: &Graph, cover: &CliqueCover, part: usize, support: VertexSet) -> bool {
    if g.check_set(support).is_err() {
        return false;
    }
    let Ok(form) = theta(g, cover, part) else {
        return false;
    };
    let ideal = edge_ideal(g);
    let m = SquareFreeMonomial::new(support).to_monomial(g.n());
    !ideal.contains(&m)
        && form.to_polynomial().mul(&Polynomial::term(m, num_traits::One::one())).reduce(&ideal).is_zero()
}

fn verify_certify(doc: &ReportDocument, v: &mut Verification) -> Result<()> {
    let g = embedded_graph(doc, v)?;
    let routes: Vec<Route> = doc
        .require("routes")?
        .split(',')
        .map(|r| Route::from_label(r).ok_or_else(|| Error::Report(format!("unknown route `{r}`"))))
        .collect::<Result<_>>()?;
    let applicable: bool = doc.value("applicable")?;
    let mis = enumerate_maximal_independent_sets(&g);
    let cover = if applicable {
        match CliqueCover::from_labels(&g, doc.require("cover")?) {
            Ok(c) => Some(c),
            Err(e) => {
                v.claim(false, || format!("cover is invalid: {e}"));
                return Ok(());
            }
        }
    } else {
        v.claim(find_clique_covers(&g, mis.independence_number()).is_empty(), || {
            "report says no cover of size alpha exists, but one does".into()
        });
        None
    };
    if let Some(cover) = &cover {
        let s: usize = doc.value("s")?;
        v.claim(s == cover.len() && mis.has_size(s), || format!("s = {s} does not match the cover and a maximal independent set"));
    }
    let partition = cover.as_ref().map(CliqueCover::to_partition);

    let count: usize = doc.value("witness.count")?;
    let mut witnesses = Vec::with_capacity(count);
    for i in 1..=count {
        let w = parse_witness(doc, &format!("witness.{i}"))?;
        v.claim(verify_witness(&g, partition.as_ref(), Some(mis.independence_number()), &w), || {
            format!("witness.{i} does not verify: {w:?}")
        });
        if let (Witness::Annihilator { clique_index, support }, Some(cover)) = (&w, &cover) {
            v.claim(annihilates_theta(&g, cover, *clique_index, *support), || {
                format!("witness.{i}: monomial does not annihilate the part's variable sum")
            });
        }
        witnesses.push(w);
    }

    let mut verdicts = Vec::new();
    for route in &routes {
        let Some(raw) = doc.get(&format!("verdict.{}", route.label())) else {
            v.claim(!applicable && *route != Route::Oracle, || format!("missing verdict for route {}", route.label()));
            continue;
        };
        let holds: bool =
            raw.parse().map_err(|_| Error::Report(format!("verdict.{} = `{raw}` is not a boolean", route.label())))?;
        verdicts.push(holds);
        match route {
            Route::Oracle => {
                let backed = if holds { mis.is_pure() } else { witnesses.iter().any(|w| matches!(w, Witness::UnequalMis { .. })) };
                v.claim(backed, || format!("oracle verdict {holds} is not supported"));
            }
            Route::Domination => {
                let Some(cover) = &cover else { continue };
                for (i, &part) in cover.cliques().iter().enumerate() {
                    let found = has_independent_dominating_set_outside(&g, part)?;
                    let listed = witnesses.iter().any(|w| matches!(w, Witness::IndependentDominator { clique_index, .. } if *clique_index == i));
                    v.claim(found.is_some() == listed, || format!("part {} domination witness mismatch", i + 1));
                }
                let none_listed = !witnesses.iter().any(|w| matches!(w, Witness::IndependentDominator { .. }));
                v.claim(holds == none_listed, || format!("corollary3 verdict {holds} contradicts its witnesses"));
            }
            Route::Algebraic => {
                let Some(cover) = &cover else { continue };
                let ideal = edge_ideal(&g);
                for i in 0..cover.len() {
                    let found = linear_zero_divisor_witness(&theta(&g, cover, i)?, &ideal)?;
                    let listed = witnesses.iter().any(|w| matches!(w, Witness::Annihilator { clique_index, .. } if *clique_index == i));
                    v.claim(found.is_some() == listed, || format!("part {} annihilator mismatch", i + 1));
                }
                let none_listed = !witnesses.iter().any(|w| matches!(w, Witness::Annihilator { .. }));
                v.claim(holds == none_listed, || format!("algebraic verdict {holds} contradicts its witnesses"));
            }
        }
    }
    let agree: bool = doc.value("agree")?;
    v.claim(agree == verdicts.windows(2).all(|w| w[0] == w[1]), || "agree flag does not match the verdicts".into());
    let witnesses_agree: bool = doc.value("witnesses_agree")?;
    if routes.contains(&Route::Domination) && routes.contains(&Route::Algebraic) && applicable {
        let dominators: BTreeMap<usize, VertexSet> = witnesses
            .iter()
            .filter_map(|w| match *w {
                Witness::IndependentDominator { clique_index, set } => Some((clique_index, set)),
                _ => None,
            })
            .collect();
        let annihilators: BTreeMap<usize, VertexSet> = witnesses
            .iter()
            .filter_map(|w| match *w {
                Witness::Annihilator { clique_index, support } => Some((clique_index, support)),
                _ => None,
            })
            .collect();
        v.claim(witnesses_agree == (dominators == annihilators), || "witnesses_agree flag does not match the witnesses".into());
    }
    Ok(())
}

fn verify_algebra(doc: &ReportDocument, v: &mut Verification) -> Result<()> {
    let g = embedded_graph(doc, v)?;
    let cover = match CliqueCover::from_labels(&g, doc.require("cover")?) {
        Ok(c) => c,
        Err(e) => {
            v.claim(false, || format!("cover is invalid: {e}"));
            return Ok(());
        }
    };
    let count: usize = doc.value("theta.count")?;
    v.claim(count == cover.len(), || format!("theta.count = {count} but the cover has {} parts", cover.len()));
    let ideal = edge_ideal(&g);
    let mut all_regular = true;
    for i in 0..count.min(cover.len()) {
        let prefix = format!("theta.{}", i + 1);
        let form = theta(&g, &cover, i)?;
        let listed = doc.require(&format!("{prefix}.form"))?;
        v.claim(listed == form.to_string(), || format!("{prefix}.form = `{listed}` but the part sums to `{form}`"));
        let zero_divisor: bool = doc.value(&format!("{prefix}.zero_divisor"))?;
        all_regular &= !zero_divisor;
        if zero_divisor {
            let support = set_value(doc, &format!("{prefix}.annihilator"))?;
            v.claim(annihilates_theta(&g, &cover, i, support), || format!("{prefix}: annihilator does not verify"));
        } else {
            let found = linear_zero_divisor_witness(&form, &ideal)?;
            v.claim(found.is_none(), || format!("{prefix} is a zero-divisor after all"));
        }
    }
    let regular: bool = doc.value("theta_regular")?;
    v.claim(regular == all_regular, || "theta_regular does not match the per-part results".into());
    Ok(())
}

fn verify_bipartite(doc: &ReportDocument, v: &mut Verification) -> Result<()> {
    let g = embedded_graph(doc, v)?;
    let applicable: bool = doc.value("applicable")?;
    v.claim(applicable == (g.is_bipartite() && !g.has_isolated_vertex()), || "applicability does not match the graph".into());
    let oracle: bool = doc.value("oracle.well_covered")?;
    v.claim(oracle == is_well_covered(&g).holds(), || "oracle verdict does not match the enumeration".into());
    if !applicable {
        return Ok(());
    }
    let matching = parse_pairs(doc.require("matching")?)?;
    let mut used = VertexSet::EMPTY;
    let mut is_matching = true;
    for &(x, y) in &matching {
        is_matching &= x < g.n() && y < g.n() && g.has_edge(x, y) && !used.contains(x) && !used.contains(y);
        if x < g.n() && y < g.n() {
            used.insert(x);
            used.insert(y);
        }
    }
    v.claim(is_matching, || "listed matching is not a matching of the graph".into());
    let holds: bool = doc.value("holds")?;
    if holds {
        let perfect = is_matching && used == g.vertices();
        let complete = matching.iter().all(|&(x, y)| {
            g.neighbors(x).without(y).iter().all(|a| g.neighbors(y).without(x).iter().all(|b| g.has_edge(a, b)))
        });
        v.claim(perfect && complete, || "criterion does not hold on the listed matching".into());
    } else {
        match doc.require("failure")? {
            "no_perfect_matching" => {
                let (left, right) = g.bipartition().expect("applicable graphs are bipartite");
                let size = maximum_matching(&g, left, right)?.len();
                v.claim(2 * size < g.n(), || "a perfect matching exists".into());
            }
            "not_complete_bipartite" => {
                let (x, y) = parse_pair(doc.require("failure.edge")?)?;
                let (a, b) = parse_pair(doc.require("failure.pair")?)?;
                let ok = matching.contains(&(x, y))
                    && a < g.n()
                    && b < g.n()
                    && g.neighbors(x).without(y).contains(a)
                    && g.neighbors(y).without(x).contains(b)
                    && !g.has_edge(a, b);
                v.claim(ok, || "offending pair does not witness a failure".into());
            }
            other => return Err(Error::Report(format!("unknown failure `{other}`"))),
        }
    }
    let agree: bool = doc.value("agree")?;
    v.claim(agree == (holds == oracle), || "agree flag does not match".into());
    Ok(())
}

fn verify_scan(doc: &ReportDocument, v: &mut Verification) -> Result<()> {
    let examined: u64 = doc.value("examined")?;
    let qualifying: u64 = doc.value("qualifying")?;
    v.claim(qualifying <= examined, || format!("qualifying = {qualifying} exceeds examined = {examined}"));
    if let Some(any) = doc.get("qualifying_any_partition") {
        let any: u64 = any.parse().map_err(|_| Error::Report("qualifying_any_partition is not a count".into()))?;
        v.claim(qualifying <= any && any <= examined, || "qualifying_any_partition is out of range".into());
    }
    let checks: Vec<Check> = doc
        .require("checks")?
        .split(',')
        .filter(|c| !c.is_empty())
        .map(|c| Check::from_label(c).ok_or_else(|| Error::Report(format!("unknown check `{c}`"))))
        .collect::<Result<_>>()?;
    let mut failures = 0u64;
    for check in &checks {
        failures += doc.value::<u64>(&format!("tally.{}.fail", check.label()))?;
    }
    let total: u64 = doc.value("counterexample.total")?;
    let count: usize = doc.value("counterexample.count")?;
    v.claim(failures == total, || format!("tallies record {failures} failures but {total} counterexamples"));
    v.claim(count as u64 == total.min(COUNTEREXAMPLE_LIMIT as u64), || "counterexample.count is inconsistent".into());
    for i in 1..=count {
        let prefix = format!("counterexample.{i}");
        let g = parse_graph6(doc.require(&format!("{prefix}.graph6"))?)?;
        let label = doc.require(&format!("{prefix}.check"))?;
        let check = Check::from_label(label).ok_or_else(|| Error::Report(format!("unknown check `{label}`")))?;
        let partition = match doc.get(&format!("{prefix}.partition")) {
            Some(text) => Some(Partition::from_labels(g.n(), text)?),
            None => None,
        };
        v.claim(check.reproduces(&g, partition.as_ref()), || format!("{prefix} does not reproduce"));
        if doc.get(&format!("{prefix}.certificate.reason")).is_some() {
            let reason = parse_non_uniform(doc, &format!("{prefix}.certificate"), &g)?;
            let certificate = Certificate::NotUniform { reason };
            v.claim(certificate.verify(&g), || format!("{prefix} certificate does not verify"));
        }
    }
    Ok(())
}
