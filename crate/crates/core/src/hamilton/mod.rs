//! Hamiltonian paths and cycles in `G²` with prescribed edges of `G`.
//!
//! [`HamHost`] is the search engine; the free functions here wrap it for the
//! common queries, and [`verify_square_cycle`] / [`verify_square_path`]
//! re-check any answer from the BFS distance table alone. `fk` holds the
//! `F_k` certificates and `checks` the statements built on top.

pub mod checks;
pub mod fk;
mod search;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::powers::square_by_distance;
use crate::search::Outcome;

pub use fk::{
    check_fk, verify_certificate, CertificateViolation, FkCertificate, FkQuery, FkSolver,
};
pub use search::{HamHost, RoutedPath, MAX_SEARCH_ORDER};

/// Side conditions for a hamiltonian cycle of `G²`: both cycle edges at `v`
/// are edges of `G`, and every vertex of `w` has a further cycle edge in `G`,
/// all of these edges distinct.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HamCycleConstraint {
    pub v: Option<Vertex>,
    pub w: Vec<Vertex>,
}

impl HamCycleConstraint {
    /// `[v; w1, …, wk]`.
    pub fn bracket(v: Vertex, ws: &[Vertex]) -> Self {
        HamCycleConstraint {
            v: Some(v),
            w: ws.to_vec(),
        }
    }

    /// Only one `G`-edge at each listed vertex.
    pub fn touching(ws: &[Vertex]) -> Self {
        HamCycleConstraint {
            v: None,
            w: ws.to_vec(),
        }
    }
}

/// A hamiltonian cycle of a square, as a cyclic vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareCycle {
    pub vertices: Vec<Vertex>,
}

/// Hamiltonian `st`-path in `G²` giving each vertex of `needs_g_edge` its own
/// path edge from `G`.
pub fn ham_path_in_square(
    g: &Graph,
    s: Vertex,
    t: Vertex,
    needs_g_edge: &[Vertex],
    budget: u64,
) -> Result<Outcome<Vec<Vertex>>> {
    let host = HamHost::square_of(g)?;
    Ok(host
        .find_path(s, t, needs_g_edge, budget)?
        .map(|r| r.vertices))
}

/// Hamiltonian cycle in `G²` satisfying `c`.
pub fn ham_cycle_in_square(
    g: &Graph,
    c: &HamCycleConstraint,
    budget: u64,
) -> Result<Outcome<SquareCycle>> {
    if g.order() < 3 {
        return Err(Error::TooSmall(g.order()));
    }
    let host = HamHost::square_of(g)?;
    Ok(host.find_cycle(c.v, &c.w, budget)?.map(|r| SquareCycle {
        vertices: r.vertices,
    }))
}

/// `G⁺`: `G` plus a new vertex `y = n` joined to `x1` and `x2`.
pub fn g_plus(g: &Graph, x1: Vertex, x2: Vertex) -> Result<(Graph, Vertex)> {
    g.check_vertex(x1)?;
    g.check_vertex(x2)?;
    if x1 == x2 {
        return Err(Error::SameVertex(x1));
    }
    let y = g.order();
    let edges = g.edges().iter().copied().chain([(y, x1), (y, x2)]);
    Ok((Graph::new(y + 1, edges)?, y))
}

/// Why a claimed hamiltonian path or cycle of a square was rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum HamViolation {
    #[error("the sequence is not a permutation of the required vertices")]
    NotHamiltonian,
    #[error("{a} and {b} are consecutive but at distance > 2")]
    NotInSquare { a: Vertex, b: Vertex },
    #[error("path does not run between the requested endpoints")]
    WrongEndpoints,
    #[error("an edge at {vertex} required to be in G is not")]
    MissingBaseEdge { vertex: Vertex },
    #[error("no distinct G-edges can be assigned to the constrained vertices")]
    NotDistinct,
}

/// Pair-adjacency in `G²` from BFS distances.
pub(crate) fn square_table(g: &Graph) -> Vec<Vec<bool>> {
    let sq = square_by_distance(g);
    let n = g.order();
    let mut t = vec![vec![false; n]; n];
    for &(a, b) in sq.edges() {
        t[a][b] = true;
        t[b][a] = true;
    }
    t
}

fn check_sequence(
    g: &Graph,
    seq: &[Vertex],
    skip: Option<Vertex>,
    closed: bool,
) -> Result<Vec<(Vertex, Vertex)>, HamViolation> {
    let n = g.order();
    let mut expected: Vec<Vertex> = g.vertices().filter(|&v| Some(v) != skip).collect();
    let mut got = seq.to_vec();
    got.sort_unstable();
    expected.sort_unstable();
    if got != expected {
        return Err(HamViolation::NotHamiltonian);
    }
    let table = square_table(g);
    let mut pairs: Vec<(Vertex, Vertex)> = seq.windows(2).map(|w| (w[0], w[1])).collect();
    if closed && seq.len() >= 3 {
        pairs.push((seq[seq.len() - 1], seq[0]));
    }
    for &(a, b) in &pairs {
        if a >= n || b >= n || !table[a][b] {
            return Err(HamViolation::NotInSquare { a, b });
        }
    }
    Ok(pairs)
}

/// Can each vertex of `vs` get its own unused pair from `pairs` that is an
/// edge of `g` and touches it?
pub(crate) fn distinct_g_edges(
    g: &Graph,
    vs: &[Vertex],
    pairs: &[(Vertex, Vertex)],
    used: &mut [bool],
) -> bool {
    let Some((&v, rest)) = vs.split_first() else {
        return true;
    };
    for (i, &(a, b)) in pairs.iter().enumerate() {
        if !used[i] && (a == v || b == v) && g.adjacent(a, b) {
            used[i] = true;
            if distinct_g_edges(g, rest, pairs, used) {
                return true;
            }
            used[i] = false;
        }
    }
    false
}

/// Re-checks a hamiltonian cycle of `G²` (or of `G² - skip`) against `c`
/// without using the search code.
pub fn verify_square_cycle(
    g: &Graph,
    cycle: &[Vertex],
    c: &HamCycleConstraint,
    skip: Option<Vertex>,
) -> Result<(), HamViolation> {
    if cycle.len() < 3 {
        return Err(HamViolation::NotHamiltonian);
    }
    let pairs = check_sequence(g, cycle, skip, true)?;
    let mut used = vec![false; pairs.len()];
    if let Some(v) = c.v {
        let Some(pos) = cycle.iter().position(|&x| x == v) else {
            return Err(HamViolation::NotHamiltonian);
        };
        let before = (pos + pairs.len() - 1) % pairs.len();
        for i in [before, pos] {
            let (a, b) = pairs[i];
            if !g.adjacent(a, b) {
                return Err(HamViolation::MissingBaseEdge { vertex: v });
            }
            used[i] = true;
        }
    }
    if !distinct_g_edges(g, &c.w, &pairs, &mut used) {
        return Err(HamViolation::NotDistinct);
    }
    Ok(())
}

/// Re-checks a hamiltonian `st`-path of `G²` on which every vertex of
/// `needs_g_edge` has its own edge of `G`.
pub fn verify_square_path(
    g: &Graph,
    path: &[Vertex],
    s: Vertex,
    t: Vertex,
    needs_g_edge: &[Vertex],
) -> Result<(), HamViolation> {
    if path.first() != Some(&s) || path.last() != Some(&t) || s == t {
        return Err(HamViolation::WrongEndpoints);
    }
    let pairs = check_sequence(g, path, None, false)?;
    let mut used = vec![false; pairs.len()];
    if !distinct_g_edges(g, needs_g_edge, &pairs, &mut used) {
        return Err(HamViolation::NotDistinct);
    }
    Ok(())
}
