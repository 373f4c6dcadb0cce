//! Enumerator counts against published sequences, and the structural DT
//! generator against plain filtering.

use hamsq::corpus::enumerate::{all_graphs, all_graphs_range, dt_blocks, trees};
use hamsq::corpus::{CorpusFilter, Predicate};
use hamsq::decomposition::{is_dt_graph, is_two_connected};

#[test]
fn graph_counts_match_oeis_a000088() {
    let want = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
    for (n, &w) in want.iter().enumerate() {
        assert_eq!(all_graphs(n).unwrap().len(), w, "n = {n}");
    }
}

#[test]
fn two_connected_counts_match_oeis_a002218() {
    let all = all_graphs_range(3, 8).unwrap();
    let want = [(3, 1), (4, 3), (5, 10), (6, 56), (7, 468), (8, 7123)];
    for (n, w) in want {
        let got = all
            .iter()
            .filter(|g| g.order() == n && is_two_connected(g))
            .count();
        assert_eq!(got, w, "n = {n}");
    }
}

#[test]
fn tree_counts_match_oeis_a000055() {
    let want = [1, 1, 1, 2, 3, 6, 11, 23, 47];
    for (i, &w) in want.iter().enumerate() {
        let ts = trees(i + 1).unwrap();
        assert_eq!(ts.len(), w, "n = {}", i + 1);
        let f = CorpusFilter::new(vec![Predicate::Tree], 1..=9).unwrap();
        assert!(ts.iter().all(|t| f.accepts(t)));
    }
}

#[test]
fn dt_generator_agrees_with_filtering() {
    for n in 3..=8 {
        let filtered: Vec<_> = all_graphs(n)
            .unwrap()
            .into_iter()
            .filter(|g| is_two_connected(g) && is_dt_graph(g))
            .collect();
        assert_eq!(dt_blocks(n).unwrap(), filtered, "n = {n}");
    }
}
