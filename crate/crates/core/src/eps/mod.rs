//! EPS- and JEPS-graphs: spanning connected subgraphs split into an eulerian
//! part `E` (all degrees even, possibly disconnected or empty), a linear
//! forest `P`, and for JEPS-graphs an open trail `J`.
//!
//! The module has three independent layers: the decomposition types with
//! their verifier, an exact budgeted labeling search (`search`), and the
//! cycle machinery (`cycles`) used to build constraints. `checks` runs the
//! existence statements about these objects over concrete graphs.

pub mod checks;
pub mod cycles;
mod search;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::decomposition::block_forest;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex, VertexSet};

pub use cycles::{
    best_w_cycle, find_cycle_through, find_vw1w2_maximal_cycle, CycleWitness, WCycle,
};
pub use search::{find_eps, find_jeps};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EpsDecomposition {
    pub e: Vec<EdgeId>,
    pub p: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JepsDecomposition {
    pub e: Vec<EdgeId>,
    pub p: Vec<EdgeId>,
    pub j: Vec<EdgeId>,
    /// The two odd vertices of `J`.
    pub ends: (Vertex, Vertex),
}

impl EpsDecomposition {
    pub fn new(mut e: Vec<EdgeId>, mut p: Vec<EdgeId>) -> Self {
        e.sort_unstable();
        p.sort_unstable();
        EpsDecomposition { e, p }
    }

    pub fn p_degrees(&self, host: &Graph) -> Vec<usize> {
        degrees(host, &self.p)
    }

    pub fn e_degrees(&self, host: &Graph) -> Vec<usize> {
        degrees(host, &self.e)
    }

    /// JSON witness `{e, p, host_hash}`.
    pub fn to_json(&self, host: &Graph) -> serde_json::Value {
        serde_json::json!({ "e": self.e, "p": self.p, "host_hash": host.digest() })
    }
}

impl JepsDecomposition {
    pub fn p_degrees(&self, host: &Graph) -> Vec<usize> {
        degrees(host, &self.p)
    }

    /// JSON witness `{e, p, j, host_hash}`.
    pub fn to_json(&self, host: &Graph) -> serde_json::Value {
        serde_json::json!({
            "e": self.e, "p": self.p, "j": self.j, "host_hash": host.digest()
        })
    }
}

pub(crate) fn degrees(host: &Graph, ids: &[EdgeId]) -> Vec<usize> {
    let mut d = vec![0; host.order()];
    for &e in ids {
        if let Ok((u, v)) = host.endpoints(e) {
            d[u] += 1;
            d[v] += 1;
        }
    }
    d
}

/// The first clause of the EPS/JEPS definition that a labeling breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum EpsViolation {
    #[error("edge id {edge} is not an edge of the host")]
    UnknownEdge { edge: EdgeId },
    #[error("edge {edge} carries more than one label")]
    Overlap { edge: EdgeId },
    #[error("vertex {vertex} has odd degree in E")]
    OddInEulerian { vertex: Vertex },
    #[error("vertex {vertex} has degree above 2 in P")]
    LinearForestDegree { vertex: Vertex },
    #[error("P contains a cycle")]
    LinearForestCycle,
    #[error("vertex {vertex} is not covered by S")]
    NotSpanning { vertex: Vertex },
    #[error("S is disconnected")]
    Disconnected,
    #[error("J ends must be two distinct vertices")]
    TrailEnds,
    #[error("J is empty or disconnected")]
    TrailDisconnected,
    #[error("vertex {vertex} has the wrong parity in J")]
    TrailParity { vertex: Vertex },
}

/// Checks every EPS invariant of `d` against `host`.
pub fn verify_eps(host: &Graph, d: &EpsDecomposition) -> Result<(), EpsViolation> {
    verify_parts(host, &d.e, &d.p, None)
}

/// Checks every JEPS invariant of `d` against `host`.
pub fn verify_jeps(host: &Graph, d: &JepsDecomposition) -> Result<(), EpsViolation> {
    verify_parts(host, &d.e, &d.p, Some((&d.j, d.ends)))
}

fn verify_parts(
    host: &Graph,
    e: &[EdgeId],
    p: &[EdgeId],
    j: Option<(&[EdgeId], (Vertex, Vertex))>,
) -> Result<(), EpsViolation> {
    let n = host.order();
    let mut used = vec![false; host.size()];
    let trail: &[EdgeId] = j.map(|(j, _)| j).unwrap_or(&[]);
    for &edge in e.iter().chain(p).chain(trail) {
        let slot = used
            .get_mut(edge)
            .ok_or(EpsViolation::UnknownEdge { edge })?;
        if *slot {
            return Err(EpsViolation::Overlap { edge });
        }
        *slot = true;
    }

    if let Some(vertex) = degrees(host, e).iter().position(|d| d % 2 == 1) {
        return Err(EpsViolation::OddInEulerian { vertex });
    }
    if let Some(vertex) = degrees(host, p).iter().position(|&d| d > 2) {
        return Err(EpsViolation::LinearForestDegree { vertex });
    }
    let mut uf = UnionFind::new(n);
    for &edge in p {
        let (u, v) = host.edges()[edge];
        if !uf.union(u, v) {
            return Err(EpsViolation::LinearForestCycle);
        }
    }

    if let Some((j, (a, b))) = j {
        if a == b || a >= n || b >= n {
            return Err(EpsViolation::TrailEnds);
        }
        let dj = degrees(host, j);
        if let Some(vertex) = (0..n).find(|&v| (dj[v] % 2 == 1) != (v == a || v == b)) {
            return Err(EpsViolation::TrailParity { vertex });
        }
        if !edges_connected(host, j) {
            return Err(EpsViolation::TrailDisconnected);
        }
    }

    let all: Vec<EdgeId> = e.iter().chain(p).chain(trail).copied().collect();
    if n >= 2 {
        let ds = degrees(host, &all);
        if let Some(vertex) = ds.iter().position(|&d| d == 0) {
            return Err(EpsViolation::NotSpanning { vertex });
        }
    }
    let mut uf = UnionFind::new(n);
    for &edge in &all {
        let (u, v) = host.edges()[edge];
        uf.union(u, v);
    }
    if (1..n).any(|v| uf.find(v) != uf.find(0)) {
        return Err(EpsViolation::Disconnected);
    }
    Ok(())
}

/// Nonempty edge set whose edges form a single connected piece.
fn edges_connected(host: &Graph, ids: &[EdgeId]) -> bool {
    let Some(&first) = ids.first() else {
        return false;
    };
    let mut uf = UnionFind::new(host.order());
    for &edge in ids {
        let (u, v) = host.edges()[edge];
        uf.union(u, v);
    }
    let root = uf.find(host.edges()[first].0);
    ids.iter()
        .all(|&edge| uf.find(host.edges()[edge].0) == root)
}

/// Deletes `P`-edges that lie on a cycle of `S`, one at a time (smallest id
/// first), until every remaining `P`-edge is a bridge of `S`. `E` is kept.
pub fn normalize_eps(host: &Graph, d: &EpsDecomposition) -> Result<EpsDecomposition> {
    verify_eps(host, d).map_err(|v| Error::InvalidInput(v.to_string()))?;
    let mut p = d.p.clone();
    loop {
        let s: Vec<EdgeId> = d.e.iter().chain(&p).copied().collect();
        let sub = host.edge_subgraph(&s)?;
        let bridges = block_forest(&sub).bridges();
        // Edge ids of `sub` index into `s`.
        let on_cycle = p
            .iter()
            .enumerate()
            .map(|(i, &edge)| (d.e.len() + i, edge))
            .filter(|(local, _)| bridges.binary_search(local).is_err())
            .map(|(_, edge)| edge)
            .min();
        match on_cycle {
            Some(edge) => p.retain(|&x| x != edge),
            None => return Ok(EpsDecomposition::new(d.e.clone(), p)),
        }
    }
}

/// Upper bound on `d_P(v)` for one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PCap {
    Zero,
    AtMostOne,
    Free,
}

impl PCap {
    pub(crate) fn max_degree(self) -> u8 {
        match self {
            PCap::Zero => 0,
            PCap::AtMostOne => 1,
            PCap::Free => 2,
        }
    }
}

/// Side conditions on an EPS/JEPS-graph beyond the definition itself.
///
/// Covers the bracket families: `[v; w]` is `cap(v, Zero)` plus
/// `cap(w, AtMostOne)`, `[w1, …, wk]` caps every `wi` at one, and a required
/// cycle `K` must lie inside `E`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct DegreeConstraint {
    pub caps: BTreeMap<Vertex, PCap>,
    pub required_cycle: Option<CycleWitness>,
    /// Reject decompositions with empty `E`.
    pub nonempty_e: bool,
    /// At most `limit` vertices of the set may have `d_P = 2`.
    pub saturation: Option<(VertexSet, usize)>,
}

impl DegreeConstraint {
    pub fn new() -> Self {
        Self::default()
    }

    /// `[v; w1, …, wk]`: `d_P(v) = 0` and `d_P(wi) <= 1`.
    pub fn bracket(v: Vertex, ws: &[Vertex]) -> Self {
        let mut c = Self::new().cap(v, PCap::Zero);
        for &w in ws {
            c = c.cap(w, PCap::AtMostOne);
        }
        c
    }

    /// `[w1, …, wk]`: `d_P(wi) <= 1`.
    pub fn soft(ws: &[Vertex]) -> Self {
        ws.iter()
            .fold(Self::new(), |c, &w| c.cap(w, PCap::AtMostOne))
    }

    /// Adds a cap, keeping the stricter one if `v` is already capped.
    pub fn cap(mut self, v: Vertex, cap: PCap) -> Self {
        let slot = self.caps.entry(v).or_insert(PCap::Free);
        *slot = (*slot).min(cap);
        self
    }

    pub fn with_cycle(mut self, k: CycleWitness) -> Self {
        self.required_cycle = Some(k);
        self
    }

    pub fn with_nonempty_e(mut self) -> Self {
        self.nonempty_e = true;
        self
    }

    pub fn with_saturation(mut self, set: VertexSet, limit: usize) -> Self {
        self.saturation = Some((set, limit));
        self
    }

    pub fn cap_of(&self, v: Vertex) -> PCap {
        self.caps.get(&v).copied().unwrap_or(PCap::Free)
    }

    pub(crate) fn validate(&self, host: &Graph) -> Result<()> {
        for &v in self.caps.keys() {
            host.check_vertex(v)?;
        }
        if let Some(k) = &self.required_cycle {
            if !k.is_valid_in(host) {
                return Err(Error::InvalidInput(
                    "required cycle is not a cycle of the host".into(),
                ));
            }
        }
        if let Some((set, _)) = &self.saturation {
            for &v in set {
                host.check_vertex(v)?;
            }
        }
        Ok(())
    }

    /// Checks the side conditions on an already verified labeling.
    pub fn admits(&self, host: &Graph, e: &[EdgeId], p: &[EdgeId]) -> bool {
        let dp = degrees(host, p);
        if self
            .caps
            .iter()
            .any(|(&v, cap)| dp[v] > cap.max_degree() as usize)
        {
            return false;
        }
        if let Some(k) = &self.required_cycle {
            if !k.edges.iter().all(|edge| e.contains(edge)) {
                return false;
            }
        }
        if self.nonempty_e && e.is_empty() {
            return false;
        }
        if let Some((set, limit)) = &self.saturation {
            if set.iter().filter(|&&v| dp[v] == 2).count() > *limit {
                return false;
            }
        }
        true
    }
}

/// Union-find with union by size and path halving.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    fn c4() -> Graph {
        g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    #[test]
    fn verify_examples() {
        assert_eq!(
            verify_eps(&c4(), &EpsDecomposition::new(vec![0, 1, 2, 3], vec![])),
            Ok(())
        );
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            verify_eps(&p3, &EpsDecomposition::new(vec![], vec![0, 1])),
            Ok(())
        );
        assert!(matches!(
            verify_eps(&c4(), &EpsDecomposition::new(vec![0, 1, 2], vec![])),
            Err(EpsViolation::OddInEulerian { .. })
        ));
    }

    #[test]
    fn verify_catches_each_clause() {
        let c = c4();
        assert_eq!(
            verify_eps(&c, &EpsDecomposition::new(vec![0], vec![0])),
            Err(EpsViolation::Overlap { edge: 0 })
        );
        assert_eq!(
            verify_eps(&c, &EpsDecomposition::new(vec![], vec![0, 1, 2, 3])),
            Err(EpsViolation::LinearForestCycle)
        );
        assert_eq!(
            verify_eps(&c, &EpsDecomposition::new(vec![], vec![0, 1])),
            Err(EpsViolation::NotSpanning { vertex: 3 })
        );
        assert_eq!(
            verify_eps(&c, &EpsDecomposition::new(vec![], vec![7])),
            Err(EpsViolation::UnknownEdge { edge: 7 })
        );
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(
            verify_eps(&star, &EpsDecomposition::new(vec![], vec![0, 1, 2])),
            Err(EpsViolation::LinearForestDegree { vertex: 0 })
        );
        // Two disjoint digons: even everywhere, spanning, not connected.
        let two = g(4, &[(0, 1), (0, 1), (2, 3), (2, 3)]);
        assert_eq!(
            verify_eps(&two, &EpsDecomposition::new(vec![0, 1, 2, 3], vec![])),
            Err(EpsViolation::Disconnected)
        );
    }

    #[test]
    fn verify_jeps_trail() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let ok = JepsDecomposition {
            e: vec![],
            p: vec![],
            j: vec![0, 1],
            ends: (0, 2),
        };
        assert_eq!(verify_jeps(&p3, &ok), Ok(()));
        let wrong = JepsDecomposition {
            ends: (0, 1),
            ..ok.clone()
        };
        assert!(matches!(
            verify_jeps(&p3, &wrong),
            Err(EpsViolation::TrailParity { .. })
        ));
        let same = JepsDecomposition { ends: (0, 0), ..ok };
        assert_eq!(verify_jeps(&p3, &same), Err(EpsViolation::TrailEnds));
    }

    #[test]
    fn normalize_drops_chord_on_cycle() {
        // C4 plus chord 0-2 labeled P.
        let host = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let d = EpsDecomposition::new(vec![0, 1, 2, 3], vec![4]);
        let n = normalize_eps(&host, &d).unwrap();
        assert_eq!(n, EpsDecomposition::new(vec![0, 1, 2, 3], vec![]));
        assert_eq!(verify_eps(&host, &n), Ok(()));
    }

    #[test]
    fn normalize_identities() {
        let tree = g(4, &[(0, 1), (1, 2), (1, 3)]);
        let d = EpsDecomposition::new(vec![], vec![0, 1]);
        // Not spanning: vertex 3 uncovered.
        assert!(normalize_eps(&tree, &d).is_err());
        let path = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let d = EpsDecomposition::new(vec![], vec![0, 1, 2]);
        assert_eq!(normalize_eps(&path, &d).unwrap(), d);
        let d = EpsDecomposition::new(vec![0, 1, 2, 3], vec![]);
        assert_eq!(normalize_eps(&c4(), &d).unwrap(), d);
    }

    #[test]
    fn constraint_caps_keep_stricter() {
        let c = DegreeConstraint::bracket(0, &[1])
            .cap(0, PCap::AtMostOne)
            .cap(1, PCap::Zero);
        assert_eq!(c.cap_of(0), PCap::Zero);
        assert_eq!(c.cap_of(1), PCap::Zero);
        assert_eq!(c.cap_of(2), PCap::Free);
    }
}
