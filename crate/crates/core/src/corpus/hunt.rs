//! Exhaustive search for `F_k` failures over a corpus.
//!
//! Whether an ordered tuple `(x1, …, xk)` has a certificate does not change
//! under swapping `x1, x2` (reverse the path) or permuting `x3, …, xk` (the
//! witness requirement is per vertex). Only one representative per class is
//! solved: `x1 < x2` and `x3 < … < xk`, each standing for `2 (k-2)!` ordered
//! tuples.

use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::is_two_connected;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::hamilton::FkSolver;
use crate::search::Outcome;

use super::{edgelist, graph_name};

/// Representative tuples for `F_k` on `n` vertices, in lexicographic order.
pub fn fk_representatives(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    if k < 2 || k > n {
        return out;
    }
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            let rest: Vec<Vertex> = (0..n).filter(|&v| v != x1 && v != x2).collect();
            let mut idx: Vec<usize> = (0..k - 2).collect();
            loop {
                let mut a = vec![x1, x2];
                a.extend(idx.iter().map(|&i| rest[i]));
                out.push(a);
                // Next (k-2)-combination of `rest`.
                let m = rest.len();
                let Some(i) = (0..idx.len()).rev().find(|&i| idx[i] < m - (idx.len() - i)) else {
                    break;
                };
                idx[i] += 1;
                for j in i + 1..idx.len() {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
    }
    out
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Queries solved, then `none` and `unknown` entries, for one graph.
type GraphHunt = (u64, Vec<HuntEntry>, Vec<HuntEntry>);

/// A query the hunter could not certify.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntEntry {
    pub graph_index: usize,
    pub graph: String,
    pub a: Vec<Vertex>,
    /// The host as an edge list, so the exhibit stands on its own.
    pub edgelist: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntReport {
    pub k: usize,
    pub graphs_scanned: usize,
    pub graphs_skipped: usize,
    /// Representative queries solved.
    pub queries: u64,
    /// Ordered tuples those representatives stand for.
    pub orderings: u64,
    pub none: Vec<HuntEntry>,
    pub unknown: Vec<HuntEntry>,
}

/// Runs every representative `F_k` query on every 2-connected graph of
/// `graphs`; other graphs are counted as skipped. Runs on the current rayon
/// pool; the report does not depend on scheduling.
pub fn hunt_fk_failures(graphs: &[Graph], k: usize, budget: u64) -> Result<HuntReport> {
    if k < 3 {
        return Err(Error::InvalidQuery(format!(
            "k must be at least 3, got {k}"
        )));
    }
    let per_graph: Vec<Result<Option<GraphHunt>>> = graphs
        .par_iter()
        .enumerate()
        .map(|(gi, g)| {
            if !is_two_connected(g) || g.order() < k {
                return Ok(None);
            }
            let solver = FkSolver::new(g)?;
            let reps = fk_representatives(g.order(), k);
            let (mut none, mut unknown) = (Vec::new(), Vec::new());
            for a in &reps {
                let entry = || HuntEntry {
                    graph_index: gi,
                    graph: graph_name(g),
                    a: a.clone(),
                    edgelist: edgelist::encode(g),
                };
                match solver.solve(a, budget)? {
                    Outcome::Found(_) => {}
                    Outcome::NotFound => none.push(entry()),
                    Outcome::Unknown => unknown.push(entry()),
                }
            }
            Ok(Some((reps.len() as u64, none, unknown)))
        })
        .collect();
    let mut report = HuntReport {
        k,
        graphs_scanned: 0,
        graphs_skipped: 0,
        queries: 0,
        orderings: 0,
        none: Vec::new(),
        unknown: Vec::new(),
    };
    let per_rep = 2 * factorial(k - 2);
    for r in per_graph {
        match r? {
            None => report.graphs_skipped += 1,
            Some((q, none, unknown)) => {
                report.graphs_scanned += 1;
                report.queries += q;
                report.orderings += q * per_rep;
                report.none.extend(none);
                report.unknown.extend(unknown);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::generators::{complete, cycle};

    #[test]
    fn representatives_cover_all_orderings() {
        // n = 6, k = 4: 6*5*4*3 ordered tuples, 2 * 2! per class.
        let reps = fk_representatives(6, 4);
        assert_eq!(reps.len() as u64 * 4, 360);
        assert!(reps.iter().all(|a| a[0] < a[1] && a[2] < a[3]));
        assert_eq!(fk_representatives(5, 3).len(), 10 * 3);
        assert_eq!(fk_representatives(3, 4).len(), 0);
    }

    #[test]
    fn f3_holds_on_small_blocks() {
        let gs = vec![
            cycle(5),
            complete(4),
            Graph::new(3, [(0, 1), (1, 2)]).unwrap(),
        ];
        let r = hunt_fk_failures(&gs, 3, 100_000).unwrap();
        assert_eq!((r.graphs_scanned, r.graphs_skipped), (2, 1));
        assert!(r.none.is_empty() && r.unknown.is_empty());
        assert_eq!(r.orderings, 5 * 4 * 3 + 4 * 3 * 2);
    }
}
