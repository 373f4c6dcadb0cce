//! Search results against brute-force oracles.

mod common;

use std::collections::BTreeSet;

use hamsq::corpus::enumerate::all_graphs_range;
use hamsq::corpus::{fk_representatives, hunt_fk_failures};
use hamsq::decomposition::is_two_connected;
use hamsq::eps::{find_eps, find_jeps, verify_jeps, DegreeConstraint, PCap};
use hamsq::hamilton::{check_fk, verify_certificate, FkQuery, FkSolver};
use hamsq::harness::ordered_tuples;
use hamsq::{Graph, Outcome};

use common::{eps_oracle, fk_oracle};

const BUDGET: u64 = 10_000_000;

fn connected_graphs(max_n: usize) -> Vec<Graph> {
    all_graphs_range(2, max_n)
        .unwrap()
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

fn multigraphs() -> Vec<Graph> {
    vec![
        Graph::new(2, [(0, 1), (0, 1)]).unwrap(),
        Graph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap(),
        Graph::new(3, [(0, 1), (1, 2), (2, 0), (2, 0)]).unwrap(),
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 2)]).unwrap(),
    ]
}

fn caps_of(c: &DegreeConstraint) -> Vec<(usize, usize)> {
    c.caps
        .iter()
        .map(|(&v, cap)| {
            let m = match cap {
                PCap::Zero => 0,
                PCap::AtMostOne => 1,
                PCap::Free => 2,
            };
            (v, m)
        })
        .collect()
}

fn found<T>(o: Outcome<T>) -> bool {
    match o {
        Outcome::Found(_) => true,
        Outcome::NotFound => false,
        Outcome::Unknown => panic!("budget exhausted"),
    }
}

#[test]
fn eps_search_matches_labeling_oracle() {
    let graphs: Vec<Graph> = connected_graphs(5)
        .into_iter()
        .filter(|g| g.size() <= 8)
        .chain(multigraphs())
        .collect();
    let mut checked = 0;
    for g in &graphs {
        let n = g.order();
        let mut constraints = vec![
            DegreeConstraint::new(),
            (0..n).fold(DegreeConstraint::new(), |c, v| c.cap(v, PCap::Zero)),
        ];
        for v in 0..n {
            for w in (0..n).filter(|&w| w != v) {
                constraints.push(DegreeConstraint::bracket(v, &[w]));
            }
        }
        for c in constraints {
            let expect = eps_oracle(g, &caps_of(&c), None);
            assert_eq!(
                found(find_eps(g, &c, BUDGET).unwrap()),
                expect,
                "{:?} {:?}",
                g.edges(),
                c.caps
            );
            checked += 1;
        }
    }
    assert!(checked > 300);
}

#[test]
fn jeps_search_matches_labeling_oracle() {
    let graphs: Vec<Graph> = connected_graphs(5)
        .into_iter()
        .filter(|g| g.size() <= 7)
        .chain(multigraphs())
        .collect();
    for g in &graphs {
        for v in g.vertices() {
            for w in g.vertices().filter(|&w| w > v) {
                for c in [
                    DegreeConstraint::new(),
                    DegreeConstraint::new()
                        .cap(v, PCap::Zero)
                        .cap(w, PCap::Zero),
                ] {
                    let expect = eps_oracle(g, &caps_of(&c), Some((v, w)));
                    let got = find_jeps(g, v, w, &c, BUDGET).unwrap();
                    if let Outcome::Found(d) = &got {
                        assert_eq!(verify_jeps(g, d), Ok(()));
                    }
                    assert_eq!(found(got), expect, "{:?} v={v} w={w}", g.edges());
                }
            }
        }
    }
}

#[test]
fn c4_jeps_with_adjacent_ends() {
    let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    // Uncapped, the single edge 01 as J with the rest in P already works.
    assert!(eps_oracle(&c4, &[], Some((0, 1))));
    // With d_P(0) = d_P(1) = 0 only the 3-edge arc as J remains.
    let c = DegreeConstraint::new()
        .cap(0, PCap::Zero)
        .cap(1, PCap::Zero);
    assert!(eps_oracle(&c4, &[(0, 0), (1, 0)], Some((0, 1))));
    let d = find_jeps(&c4, 0, 1, &c, BUDGET).unwrap().found().unwrap();
    assert_eq!(d.j, vec![1, 2, 3]);
    assert!(d.e.is_empty() && d.p.is_empty());
}

#[test]
fn fk_solver_matches_permutation_oracle_on_small_graphs() {
    for g in connected_graphs(6).iter().filter(|g| g.order() >= 3) {
        let solver = FkSolver::new(g).unwrap();
        let ks: &[usize] = if g.order() <= 5 { &[3, 4, 5] } else { &[3] };
        for &k in ks.iter().filter(|&&k| k <= g.order()) {
            for a in ordered_tuples(g.order(), k) {
                let got = solver.solve(&a, BUDGET).unwrap();
                if let Outcome::Found(c) = &got {
                    let q = FkQuery::new(g, a.clone()).unwrap();
                    assert_eq!(verify_certificate(&q, c), Ok(()));
                }
                assert_eq!(found(got), fk_oracle(g, &a), "{:?} a={a:?}", g.edges());
            }
        }
    }
}

#[test]
fn representatives_agree_with_all_orderings() {
    let graphs: Vec<Graph> = all_graphs_range(4, 6)
        .unwrap()
        .into_iter()
        .filter(is_two_connected)
        .collect();
    for k in [4, 5] {
        let report = hunt_fk_failures(&graphs, k, BUDGET).unwrap();
        assert!(report.unknown.is_empty());
        let none: BTreeSet<(usize, Vec<usize>)> = report
            .none
            .iter()
            .map(|e| (e.graph_index, e.a.clone()))
            .collect();
        let mut reps = 0u64;
        for (i, g) in graphs.iter().enumerate().filter(|(_, g)| g.order() >= k) {
            reps += fk_representatives(g.order(), k).len() as u64;
            let solver = FkSolver::new(g).unwrap();
            for a in ordered_tuples(g.order(), k) {
                let mut rep = a.clone();
                if rep[0] > rep[1] {
                    rep.swap(0, 1);
                }
                rep[2..].sort_unstable();
                let has = found(solver.solve(&a, BUDGET).unwrap());
                assert_eq!(has, !none.contains(&(i, rep)), "graph {i} a={a:?}");
            }
        }
        assert_eq!(report.queries, reps);
    }
}

#[test]
fn f4_certificates_project_to_f3() {
    let graphs = all_graphs_range(4, 6).unwrap();
    for g in graphs.iter().filter(|g| is_two_connected(g)) {
        for a in ordered_tuples(g.order(), 4) {
            let q4 = FkQuery::new(g, a.clone()).unwrap();
            if let Outcome::Found(c) = check_fk(&q4, BUDGET).unwrap() {
                let q3 = FkQuery::new(g, a[..3].to_vec()).unwrap();
                assert_eq!(verify_certificate(&q3, &c.project(3)), Ok(()));
            }
        }
    }
}
