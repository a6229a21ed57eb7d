//! Worked examples on the named fixtures, through the public API only.

use wellcover::algebra::{edge_ideal, kernel_zero_divisor_oracle_default, theta, theta_regularity_check};
use wellcover::certify::{certify, Route};
use wellcover::enumeration::{
    enumerate_maximal_independent_sets, find_clique_covers, is_uniformly_well_covered, is_well_covered,
};
use wellcover::fixtures::{self, named};
use wellcover::recognition::{check_full_equivalence, ravindra_check, Condition};
use wellcover::{Certificate, CliqueCover, Graph, VertexSet};

fn set(labels: &str) -> VertexSet {
    VertexSet::from_labels(labels).unwrap()
}

fn mis_labels(g: &Graph) -> Vec<String> {
    enumerate_maximal_independent_sets(g).sets.iter().map(|s| s.to_labels()).collect()
}

#[test]
fn fixture_verdicts() {
    // (name, well-covered, uniformly well-covered, number of maximal independent sets)
    let expected = [
        ("gA", false, false, 6),
        ("gB", true, false, 7),
        ("gC", true, true, 6),
        ("gD", true, false, 6),
        ("c4", true, true, 2),
        ("c5", true, false, 5),
        ("c6", false, false, 5),
        ("p4", true, true, 3),
    ];
    for ((name, g), (want_name, wc, uwc, count)) in named().into_iter().zip(expected) {
        assert_eq!(name, want_name);
        let wc_cert = is_well_covered(&g);
        let uwc_cert = is_uniformly_well_covered(&g);
        assert_eq!(wc_cert.holds(), wc, "{name}");
        assert_eq!(uwc_cert.holds(), uwc, "{name}");
        assert!(wc_cert.verify(&g) && uwc_cert.verify(&g), "{name}");
        assert_eq!(enumerate_maximal_independent_sets(&g).sets.len(), count, "{name}");
    }
}

#[test]
fn mixed_sizes_witnesses() {
    let g = fixtures::mixed_mis_sizes();
    let mis = mis_labels(&g);
    assert!(mis.contains(&"1,4".to_string()) && mis.contains(&"1,3,5".to_string()));
    match is_well_covered(&g) {
        Certificate::NotWellCovered { witness_small, witness_large } => {
            assert!(g.is_maximal_independent(witness_small) && g.is_maximal_independent(witness_large));
            assert!(witness_small.len() < witness_large.len());
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn uniform_partition_of_gc() {
    let g = fixtures::uniformly_well_covered();
    match is_uniformly_well_covered(&g) {
        Certificate::UniformlyWellCovered { partition } => assert_eq!(partition.to_labels(), "1,5,6;2,3,4"),
        other => panic!("unexpected {other:?}"),
    }
    for m in enumerate_maximal_independent_sets(&g).sets {
        assert!((m & set("1,5,6")).len() == 1 && (m & set("2,3,4")).len() == 1);
    }
}

#[test]
fn coverless_graph_has_no_cover_of_any_size() {
    let g = fixtures::coverless_well_covered();
    assert!(is_well_covered(&g).holds());
    for s in 0..=g.n() {
        assert!(find_clique_covers(&g, s).is_empty(), "s = {s}");
    }
    assert!(!check_full_equivalence(&g).unwrap().applicable);
}

#[test]
fn six_cycle_routes_share_witnesses() {
    let g = fixtures::cycle(6);
    let report = certify(&g, &Route::ALL).unwrap();
    assert!(report.consistent());
    assert_eq!(report.cover.as_ref().unwrap().to_labels(), "1,2;3,4;5,6");
    for route in Route::ALL {
        assert_eq!(report.equivalence.verdict(route.condition()), Some(false));
    }
    assert!(report.equivalence.verify_witnesses(&g));
}

#[test]
fn theta_regularity_on_gc() {
    let g = fixtures::uniformly_well_covered();
    let cover = CliqueCover::from_labels(&g, "1,5,6;2,3,4").unwrap();
    let report = theta_regularity_check(&g, &cover).unwrap();
    assert!(report.holds());
    let ideal = edge_ideal(&g);
    for i in 0..cover.len() {
        let f = theta(&g, &cover, i).unwrap();
        assert!(kernel_zero_divisor_oracle_default(&f, &ideal).unwrap().is_none());
    }
}

#[test]
fn bipartite_criterion_on_cycles_and_paths() {
    let c4 = ravindra_check(&fixtures::cycle(4));
    assert!(c4.applicable && c4.holds);
    let c6 = ravindra_check(&fixtures::cycle(6));
    assert!(c6.applicable && !c6.holds);
    let p4 = ravindra_check(&fixtures::path(4));
    assert!(p4.applicable && p4.holds);
    assert!(!ravindra_check(&fixtures::cycle(5)).applicable);
}

#[test]
fn full_equivalence_on_gc() {
    let g = fixtures::uniformly_well_covered();
    let r = check_full_equivalence(&g).unwrap();
    assert!(r.applicable && r.agree);
    assert_eq!(r.s, Some(2));
    assert_eq!(r.verdict(Condition::WellCoveredWithCover), Some(true));
    assert_eq!(r.verdict(Condition::WellDominated), Some(true));
}
