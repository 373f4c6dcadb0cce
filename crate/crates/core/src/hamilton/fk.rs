//! `F_k` queries, certificates and the certificate verifier.
//!
//! A query is an ordered tuple `(x1, …, xk)` of distinct vertices, `k >= 3`.
//! A certificate is an `x1x2`-hamiltonian path of `G²` together with, for
//! each `i >= 3`, an edge id of `G` at `xi` that the path traverses. Witness
//! edges are pairwise distinct, and no path step serves two witnesses.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::search::Outcome;

use super::search::HamHost;
use super::square_table;

#[derive(Clone, Debug)]
pub struct FkQuery<'g> {
    host: &'g Graph,
    a: Vec<Vertex>,
}

impl<'g> FkQuery<'g> {
    pub fn new(host: &'g Graph, a: Vec<Vertex>) -> Result<Self> {
        if a.len() < 3 {
            return Err(Error::InvalidQuery(format!(
                "k must be at least 3, got {}",
                a.len()
            )));
        }
        for (i, &x) in a.iter().enumerate() {
            if x >= host.order() {
                return Err(Error::InvalidQuery(format!("vertex {x} out of range")));
            }
            if a[..i].contains(&x) {
                return Err(Error::InvalidQuery(format!("vertex {x} repeated")));
            }
        }
        Ok(FkQuery { host, a })
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[Vertex] {
        &self.a
    }

    /// `{n, edges_hash, k, a}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.host.order(),
            "edges_hash": self.host.digest(),
            "k": self.k(),
            "a": self.a,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FkCertificate {
    pub path: Vec<Vertex>,
    /// Witness edge id of `G` for each index `i` in `3..=k`.
    pub witnesses: BTreeMap<usize, EdgeId>,
}

impl FkCertificate {
    /// Some witness edge ends in `x1` or `x2`. Allowed, but worth flagging.
    pub fn witness_touches_terminal(&self, q: &FkQuery<'_>) -> bool {
        let (x1, x2) = (q.a[0], q.a[1]);
        self.witnesses.values().any(|&e| {
            q.host
                .endpoints(e)
                .is_ok_and(|(u, v)| [u, v].contains(&x1) || [u, v].contains(&x2))
        })
    }

    /// Keeps the witnesses for indices `<= k`.
    pub fn project(&self, k: usize) -> FkCertificate {
        FkCertificate {
            path: self.path.clone(),
            witnesses: self.witnesses.range(..=k).map(|(&i, &e)| (i, e)).collect(),
        }
    }

    /// `{query, path, witnesses}`.
    pub fn to_json(&self, q: &FkQuery<'_>) -> serde_json::Value {
        serde_json::json!({
            "query": q.to_json(),
            "path": self.path,
            "witnesses": self.witnesses,
        })
    }
}

/// Reuses one square of `G` across many queries.
#[derive(Clone, Debug)]
pub struct FkSolver<'g> {
    graph: &'g Graph,
    host: HamHost,
}

impl<'g> FkSolver<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        Ok(FkSolver {
            graph,
            host: HamHost::square_of(graph)?,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Searches for an `F_k` `x1x2`-hamiltonian path for `a = (x1, …, xk)`.
    pub fn solve(&self, a: &[Vertex], budget: u64) -> Result<Outcome<FkCertificate>> {
        let q = FkQuery::new(self.graph, a.to_vec())?;
        let routed = self.host.find_path(q.a[0], q.a[1], &q.a[2..], budget)?;
        Ok(routed.map(|r| {
            let witnesses = r
                .assigned
                .iter()
                .enumerate()
                .map(|(j, &(u, v))| {
                    let e = self
                        .graph
                        .edge_between(u, v)
                        .expect("assigned pair is a G-edge");
                    (j + 3, e)
                })
                .collect();
            FkCertificate {
                path: r.vertices,
                witnesses,
            }
        }))
    }
}

pub fn check_fk(q: &FkQuery<'_>, budget: u64) -> Result<Outcome<FkCertificate>> {
    FkSolver::new(q.host)?.solve(&q.a, budget)
}

/// The first clause of the certificate definition that fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum CertificateViolation {
    #[error("path does not visit every vertex exactly once")]
    NotHamiltonian,
    #[error("path does not run from x1 to x2")]
    WrongEndpoints,
    #[error("consecutive vertices {a}, {b} are not adjacent in the square")]
    NotInSquare { a: Vertex, b: Vertex },
    #[error("witness set does not cover exactly the indices 3..=k")]
    WitnessIndices,
    #[error("witness for x{index} is not an edge of the host")]
    WitnessNotInHost { index: usize },
    #[error("witness for x{index} is not incident to x{index}")]
    WitnessNotIncident { index: usize },
    #[error("witness for x{index} is not traversed by the path")]
    WitnessNotOnPath { index: usize },
    #[error("witness for x{index} repeats an edge or path step already used")]
    WitnessReused { index: usize },
}

/// Checks `cert` against `q` using only the BFS distance table of the host.
pub fn verify_certificate(
    q: &FkQuery<'_>,
    cert: &FkCertificate,
) -> Result<(), CertificateViolation> {
    let g = q.host;
    let n = g.order();
    let mut sorted = cert.path.clone();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(CertificateViolation::NotHamiltonian);
    }
    if cert.path.first() != Some(&q.a[0]) || cert.path.last() != Some(&q.a[1]) {
        return Err(CertificateViolation::WrongEndpoints);
    }
    let table = square_table(g);
    for w in cert.path.windows(2) {
        if !table[w[0]][w[1]] {
            return Err(CertificateViolation::NotInSquare { a: w[0], b: w[1] });
        }
    }
    let expected: Vec<usize> = (3..=q.k()).collect();
    if cert.witnesses.keys().copied().collect::<Vec<_>>() != expected {
        return Err(CertificateViolation::WitnessIndices);
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in cert.path.iter().enumerate() {
        pos[v] = i;
    }
    let mut used_edges = Vec::new();
    let mut used_steps = Vec::new();
    for (&index, &e) in &cert.witnesses {
        let x = q.a[index - 1];
        let (u, v) = g
            .endpoints(e)
            .map_err(|_| CertificateViolation::WitnessNotInHost { index })?;
        if u != x && v != x {
            return Err(CertificateViolation::WitnessNotIncident { index });
        }
        if pos[u].abs_diff(pos[v]) != 1 {
            return Err(CertificateViolation::WitnessNotOnPath { index });
        }
        let step = pos[u].min(pos[v]);
        if used_edges.contains(&e) || used_steps.contains(&step) {
            return Err(CertificateViolation::WitnessReused { index });
        }
        used_edges.push(e);
        used_steps.push(step);
    }
    Ok(())
}
