//! Runs the independent recognition routes on one graph and cross-checks them.
//!
//! For a cover by `s = α(G)` disjoint maximal cliques, three routes decide
//! well-coveredness: the enumeration oracle, the search for an independent
//! set dominating a part from outside, and the zero-divisor test on each
//! part's variable sum. The last two also produce per-part witnesses, which
//! must coincide exactly.

use crate::algebra::{edge_ideal, linear_zero_divisor_witness, theta};
use crate::enumeration::{
    certificate_from_mis, enumerate_maximal_independent_sets, find_clique_covers, Certificate, MisReport,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::CliqueCover;
use crate::recognition::{has_independent_dominating_set_outside, Condition, EquivalenceReport, Verdict, Witness};

/// One way of deciding well-coveredness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// Compare the sizes of all maximal independent sets.
    Oracle,
    /// No part of the cover is dominated from outside by an independent set.
    Domination,
    /// Every part's variable sum is a non-zero-divisor in the edge ring.
    Algebraic,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Oracle, Route::Domination, Route::Algebraic];

    /// Name used on the command line and in reports.
    pub fn label(self) -> &'static str {
        match self {
            Route::Oracle => "oracle",
            Route::Domination => "corollary3",
            Route::Algebraic => "algebraic",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        Route::ALL.into_iter().find(|r| r.label() == label)
    }

    pub fn condition(self) -> Condition {
        match self {
            Route::Oracle => Condition::WellCovered,
            Route::Domination => Condition::NoIndependentDominator,
            Route::Algebraic => Condition::ThetaRegular,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteReport {
    pub equivalence: EquivalenceReport,
    pub cover: Option<CliqueCover>,
    /// Domination and annihilator witnesses name the same parts with the same
    /// supports. Vacuously true unless both routes ran.
    pub witnesses_agree: bool,
}

impl RouteReport {
    /// Verdicts and witnesses are consistent across routes.
    pub fn consistent(&self) -> bool {
        self.equivalence.agree && self.witnesses_agree
    }
}

/// Runs `routes` on the first cover of `g` by `α(G)` disjoint maximal cliques.
/// Without such a cover only the oracle can run; the report is then marked
/// inapplicable and carries the oracle verdict alone (if requested).
pub fn certify(g: &Graph, routes: &[Route]) -> Result<RouteReport> {
    let mis = enumerate_maximal_independent_sets(g);
    match find_clique_covers(g, mis.independence_number()).into_iter().next() {
        Some(cover) => certify_with_cover(g, &cover, routes),
        None => {
            let mut witnesses = Vec::new();
            let mut verdicts = Vec::new();
            if routes.contains(&Route::Oracle) {
                verdicts.push(Verdict { condition: Condition::WellCovered, holds: oracle(&mis, &mut witnesses) });
            }
            let equivalence =
                EquivalenceReport { applicable: false, s: None, partition: None, verdicts, agree: true, witnesses };
            Ok(RouteReport { equivalence, cover: None, witnesses_agree: true })
        }
    }
}

fn oracle(mis: &MisReport, witnesses: &mut Vec<Witness>) -> bool {
    match certificate_from_mis(mis) {
        Certificate::NotWellCovered { witness_small, witness_large } => {
            witnesses.push(Witness::UnequalMis { small: witness_small, large: witness_large });
            false
        }
        _ => true,
    }
}

/// Runs `routes` on a given cover, whose size must equal the size of some
/// maximal independent set. Routes are evaluated in the order given,
/// duplicates ignored.
pub fn certify_with_cover(g: &Graph, cover: &CliqueCover, routes: &[Route]) -> Result<RouteReport> {
    cover.validate(g)?;
    let mis = enumerate_maximal_independent_sets(g);
    let s = cover.len();
    if !mis.has_size(s) {
        return Err(Error::ClassCondition { s });
    }
    let mut witnesses = Vec::new();
    let mut verdicts: Vec<Verdict> = Vec::new();
    let mut dominators = None;
    let mut annihilators = None;
    for &route in routes {
        if verdicts.iter().any(|v| v.condition == route.condition()) {
            continue;
        }
        let holds = match route {
            Route::Oracle => oracle(&mis, &mut witnesses),
            Route::Domination => {
                let mut found = Vec::new();
                for (i, &part) in cover.cliques().iter().enumerate() {
                    if let Some(set) = has_independent_dominating_set_outside(g, part)? {
                        found.push((i, set));
                        witnesses.push(Witness::IndependentDominator { clique_index: i, set });
                    }
                }
                let holds = found.is_empty();
                dominators = Some(found);
                holds
            }
            Route::Algebraic => {
                let ideal = edge_ideal(g);
                let mut found = Vec::new();
                for i in 0..cover.len() {
                    if let Some(m) = linear_zero_divisor_witness(&theta(g, cover, i)?, &ideal)? {
                        found.push((i, m.support()));
                        witnesses.push(Witness::Annihilator { clique_index: i, support: m.support() });
                    }
                }
                let holds = found.is_empty();
                annihilators = Some(found);
                holds
            }
        };
        verdicts.push(Verdict { condition: route.condition(), holds });
    }
    let witnesses_agree = match (&dominators, &annihilators) {
        (Some(d), Some(a)) => d == a,
        _ => true,
    };
    let agree = verdicts.windows(2).all(|w| w[0].holds == w[1].holds);
    let equivalence =
        EquivalenceReport { applicable: true, s: Some(s), partition: Some(cover.to_partition()), verdicts, agree, witnesses };
    Ok(RouteReport { equivalence, cover: Some(cover.clone()), witnesses_agree })
}
