use proptest::prelude::*;
use wellcover::algebra::{
    edge_ideal, integer, linear_zero_divisor_witness, multiply_and_reduce, LinearForm, Monomial, MonomialIdeal,
    Polynomial,
};
use wellcover::io::{parse_dimacs, parse_edge_list, parse_graph6, serialize_dimacs, serialize_edge_list, serialize_graph6};
use wellcover::recognition::has_independent_dominating_set_outside;
use wellcover::{Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let full = g.vertices().bits();
        (Just(g), any::<u64>().prop_map(move |m| VertexSet::from_bits(m & full)))
    })
}

fn polynomial(nvars: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((proptest::collection::vec(0u32..3, nvars), -3i64..=3), 0..5).prop_map(move |terms| {
        Polynomial::from_terms(nvars, terms.into_iter().map(|(e, c)| (Monomial::new(e), integer(c)))).unwrap()
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let c = g.complement();
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u != v {
                    prop_assert_ne!(g.has_edge(u, v), c.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn independent_sets_are_complement_cliques((g, s) in graph_and_set(12)) {
        prop_assert_eq!(g.is_independent(s), g.complement().is_clique(s));
    }

    #[test]
    fn vertex_cover_iff_independent_complement((g, b) in graph_and_set(12)) {
        prop_assert_eq!(g.is_vertex_cover(b), g.is_independent(g.vertices() - b));
    }

    #[test]
    fn domination_is_monotone((g, a) in graph_and_set(10), extra in any::<u64>(), target in any::<u64>()) {
        let full = g.vertices();
        let b = VertexSet::from_bits(target & full.bits()) - a;
        let bigger = a | (VertexSet::from_bits(extra & full.bits()) - b);
        if g.dominates(a, b) {
            prop_assert!(g.dominates(bigger, b));
        }
    }

    #[test]
    fn formats_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&serialize_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&serialize_edge_list(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_dimacs(&serialize_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn dominator_witness_is_valid((g, c) in graph_and_set(10)) {
        prop_assume!(!c.is_empty() && g.is_clique(c));
        if let Some(s) = has_independent_dominating_set_outside(&g, c).unwrap() {
            prop_assert!(g.is_independent(s));
            prop_assert!((s & c).is_empty());
            prop_assert!(g.dominates(s, c));
        }
    }

    #[test]
    fn annihilator_witness_kills_the_form((g, c) in graph_and_set(9)) {
        prop_assume!(!c.is_empty());
        let ideal = edge_ideal(&g);
        let f = LinearForm::sum_of(g.n(), c).unwrap();
        if let Some(m) = linear_zero_divisor_witness(&f, &ideal).unwrap() {
            let m = Polynomial::term(m.to_monomial(g.n()), integer(1));
            prop_assert!(!m.reduce(&ideal).is_zero());
            prop_assert!(multiply_and_reduce(&f.to_polynomial(), &m, &ideal).unwrap().is_zero());
        }
    }

    #[test]
    fn witness_ignores_nonzero_scaling((g, c) in graph_and_set(8), k in 1i64..6, negate in any::<bool>()) {
        prop_assume!(!c.is_empty());
        let ideal = edge_ideal(&g);
        let f = LinearForm::sum_of(g.n(), c).unwrap();
        let k = if negate { -k } else { k };
        let scaled = f.scale(&integer(k)).unwrap();
        prop_assert_eq!(
            linear_zero_divisor_witness(&f, &ideal).unwrap(),
            linear_zero_divisor_witness(&scaled, &ideal).unwrap()
        );
    }

    #[test]
    fn reduced_product_is_commutative_and_associative(
        f in polynomial(4), g in polynomial(4), h in polynomial(4), gens in proptest::collection::vec(1u64..16, 0..4)
    ) {
        let supports: Vec<VertexSet> = gens.into_iter().map(VertexSet::from_bits).collect();
        let ideal = MonomialIdeal::from_supports(4, &supports).unwrap();
        let fg = multiply_and_reduce(&f, &g, &ideal).unwrap();
        prop_assert_eq!(&fg, &multiply_and_reduce(&g, &f, &ideal).unwrap());
        let left = multiply_and_reduce(&fg, &h, &ideal).unwrap();
        let gh = multiply_and_reduce(&g, &h, &ideal).unwrap();
        prop_assert_eq!(left, multiply_and_reduce(&f, &gh, &ideal).unwrap());
    }

    #[test]
    fn reduction_is_idempotent(f in polynomial(4), gens in proptest::collection::vec(1u64..16, 0..4)) {
        let supports: Vec<VertexSet> = gens.into_iter().map(VertexSet::from_bits).collect();
        let ideal = MonomialIdeal::from_supports(4, &supports).unwrap();
        let once = f.reduce(&ideal);
        prop_assert_eq!(once.reduce(&ideal), once.clone());
        for (m, _) in once.terms() {
            prop_assert!(!ideal.contains(m));
        }
    }
}
