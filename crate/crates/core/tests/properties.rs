//! Invariants over random graphs.

mod common;

use proptest::prelude::*;

use hamsq::corpus::generators::full_subdivision;
use hamsq::corpus::{filter, graph6, CorpusFilter, Predicate};
use hamsq::decomposition::{is_dt_graph, is_two_connected};
use hamsq::eps::{find_eps, normalize_eps, verify_eps, DegreeConstraint};
use hamsq::powers::{square, square_by_distance};
use hamsq::{Graph, Outcome};

/// Simple graph on `1..=max_n` vertices from a pair mask.
fn simple_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let all = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::new(n, all.zip(mask).filter(|(_, k)| *k).map(|(e, _)| e)).unwrap()
        })
    })
}

fn sorted_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    e.sort_unstable();
    e
}

proptest! {
    #[test]
    fn square_matches_distance_square(g in simple_graph(20)) {
        let a = sorted_edges(&square(&g));
        prop_assert_eq!(&a, &sorted_edges(&square_by_distance(&g)));
        prop_assert_eq!(&a, &common::square_edge_set(&g));
    }

    #[test]
    fn subdivision_is_dt_and_keeps_two_connectivity(g in simple_graph(8)) {
        let s = full_subdivision(&g);
        prop_assert!(is_dt_graph(&s));
        if g.order() >= 3 {
            prop_assert_eq!(is_two_connected(&s), is_two_connected(&g));
        }
    }

    #[test]
    fn graph6_round_trip(g in simple_graph(70)) {
        let code = graph6::encode(&g).unwrap();
        let back = graph6::decode(&code).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(sorted_edges(&back), sorted_edges(&g));
    }

    #[test]
    fn two_connected_filter_matches_vertex_deletion(gs in proptest::collection::vec(simple_graph(9), 1..20)) {
        let f = CorpusFilter::new(vec![Predicate::TwoConnected], 1..=9).unwrap();
        let kept: Vec<Graph> = filter(gs.clone(), &f).collect();
        let expect: Vec<&Graph> = gs.iter().filter(|g| common::two_connected_oracle(g)).collect();
        prop_assert_eq!(kept.len(), expect.len());
        for (a, b) in kept.iter().zip(expect) {
            prop_assert_eq!(a.edges(), b.edges());
        }
    }

    #[test]
    fn normalized_eps_has_only_bridge_p_edges(g in simple_graph(9)) {
        prop_assume!(g.is_connected());
        let d = match find_eps(&g, &DegreeConstraint::new(), 1_000_000).unwrap() {
            Outcome::Found(d) => d,
            Outcome::NotFound => return Ok(()),
            Outcome::Unknown => return Err(TestCaseError::fail("budget exhausted")),
        };
        let nd = normalize_eps(&g, &d).unwrap();
        prop_assert_eq!(verify_eps(&g, &nd), Ok(()));
        prop_assert_eq!(&nd.e, &d.e);
        prop_assert!(nd.p.iter().all(|e| d.p.contains(e)));
        // A P-edge is a bridge of S iff removing it separates its ends.
        let s: Vec<usize> = nd.e.iter().chain(&nd.p).copied().collect();
        for &pe in &nd.p {
            let rest: Vec<(usize, usize)> =
                s.iter().filter(|&&x| x != pe).map(|&x| g.edges()[x]).collect();
            let h = Graph::new(g.order(), rest).unwrap();
            let (u, v) = g.edges()[pe];
            let d = common::bfs(&common::adjacency(&h), u, None);
            prop_assert!(d[v].is_none(), "P-edge {} lies on a cycle", pe);
        }
    }
}
