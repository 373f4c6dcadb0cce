//! Exact search for EPS/JEPS-graphs by edge labeling.
//!
//! Edges are decided in ascending id order, each receiving one of the labels
//! `E < P < J < unused` (J only in JEPS mode), tried in that order. Pruning:
//!
//! * parity: once every edge at a vertex is decided, its `E`-degree must be
//!   even and its `J`-degree must have the parity of a trail end;
//! * `P` caps and acyclicity, via a union-find that is rolled back on undo;
//! * connectivity: after an edge is discarded, the decided-used plus
//!   undecided edges must still connect the graph.
//!
//! The search is complete, so exhausting the tree proves nonexistence.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::search::{Budget, Outcome, Step};

use super::UnionFind;
use super::{verify_eps, verify_jeps, DegreeConstraint, EpsDecomposition, JepsDecomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Label {
    Undecided,
    E,
    P,
    J,
    Unused,
}

/// Union-find without path compression so unions can be undone.
struct RollbackUf {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<usize>,
}

impl RollbackUf {
    fn new(n: usize) -> Self {
        RollbackUf {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Joins the classes of `a` and `b`; `false` if they were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(rb);
        true
    }

    fn undo(&mut self) {
        let rb = self.history.pop().expect("undo without union");
        let ra = self.parent[rb];
        self.size[ra] -= self.size[rb];
        self.parent[rb] = rb;
    }
}

struct LabelSearch<'g> {
    edges: &'g [(Vertex, Vertex)],
    n: usize,
    /// Trail ends in JEPS mode.
    ends: Option<(Vertex, Vertex)>,
    forced_e: Vec<bool>,
    cap: Vec<u8>,
    saturable: Vec<bool>,
    sat_limit: usize,
    sat_count: usize,
    nonempty_e: bool,
    labels: Vec<Label>,
    e_deg: Vec<u32>,
    p_deg: Vec<u8>,
    j_deg: Vec<u32>,
    undecided: Vec<u32>,
    p_forest: RollbackUf,
    budget: Budget,
}

impl<'g> LabelSearch<'g> {
    fn new(
        g: &'g Graph,
        c: &DegreeConstraint,
        ends: Option<(Vertex, Vertex)>,
        budget: u64,
    ) -> Self {
        let n = g.order();
        let m = g.size();
        let mut forced_e = vec![false; m];
        if let Some(k) = &c.required_cycle {
            for &e in &k.edges {
                forced_e[e] = true;
            }
        }
        let mut saturable = vec![false; n];
        let mut sat_limit = usize::MAX;
        if let Some((set, limit)) = &c.saturation {
            for &v in set {
                saturable[v] = true;
            }
            sat_limit = *limit;
        }
        LabelSearch {
            edges: g.edges(),
            n,
            ends,
            forced_e,
            cap: (0..n).map(|v| c.cap_of(v).max_degree()).collect(),
            saturable,
            sat_limit,
            sat_count: 0,
            nonempty_e: c.nonempty_e,
            labels: vec![Label::Undecided; m],
            e_deg: vec![0; n],
            p_deg: vec![0; n],
            j_deg: vec![0; n],
            undecided: (0..n).map(|v| g.incident(v).len() as u32).collect(),
            p_forest: RollbackUf::new(n),
            budget: Budget::new(budget),
        }
    }

    fn is_end(&self, v: Vertex) -> bool {
        matches!(self.ends, Some((a, b)) if v == a || v == b)
    }

    fn settled_ok(&self, v: Vertex) -> bool {
        self.undecided[v] > 0
            || (self.e_deg[v].is_multiple_of(2) && (self.j_deg[v] % 2 == 1) == self.is_end(v))
    }

    /// Used-or-undecided edges still connect every vertex.
    fn still_connectable(&self) -> bool {
        let mut uf = UnionFind::new(self.n);
        let mut parts = self.n;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if self.labels[i] != Label::Unused && uf.union(u, v) {
                parts -= 1;
                if parts == 1 {
                    return true;
                }
            }
        }
        parts <= 1
    }

    fn trail_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.n);
        let mut first = None;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if self.labels[i] == Label::J {
                uf.union(u, v);
                first.get_or_insert(u);
            }
        }
        let Some(root) = first.map(|r| uf.find(r)) else {
            return false;
        };
        self.edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.labels[i] == Label::J)
            .all(|(_, &(u, _))| uf.find(u) == root)
    }

    /// Applies `label` to edge `i`; returns `false` (leaving no trace) if it
    /// breaks an invariant that no completion can repair.
    fn assign(&mut self, i: usize, label: Label) -> bool {
        let (u, v) = self.edges[i];
        match label {
            Label::P => {
                if self.p_deg[u] >= self.cap[u] || self.p_deg[v] >= self.cap[v] {
                    return false;
                }
                let saturating = [u, v]
                    .iter()
                    .filter(|&&x| self.saturable[x] && self.p_deg[x] == 1)
                    .count();
                if self.sat_count + saturating > self.sat_limit {
                    return false;
                }
                if !self.p_forest.union(u, v) {
                    return false;
                }
                self.sat_count += saturating;
                self.p_deg[u] += 1;
                self.p_deg[v] += 1;
            }
            Label::E => {
                self.e_deg[u] += 1;
                self.e_deg[v] += 1;
            }
            Label::J => {
                self.j_deg[u] += 1;
                self.j_deg[v] += 1;
            }
            Label::Unused | Label::Undecided => {}
        }
        self.labels[i] = label;
        self.undecided[u] -= 1;
        self.undecided[v] -= 1;
        let ok = self.settled_ok(u)
            && self.settled_ok(v)
            && (label != Label::Unused || self.still_connectable());
        if !ok {
            self.unassign(i);
        }
        ok
    }

    fn unassign(&mut self, i: usize) {
        let (u, v) = self.edges[i];
        match self.labels[i] {
            Label::P => {
                self.p_deg[u] -= 1;
                self.p_deg[v] -= 1;
                for x in [u, v] {
                    if self.saturable[x] && self.p_deg[x] == 1 {
                        self.sat_count -= 1;
                    }
                }
                self.p_forest.undo();
            }
            Label::E => {
                self.e_deg[u] -= 1;
                self.e_deg[v] -= 1;
            }
            Label::J => {
                self.j_deg[u] -= 1;
                self.j_deg[v] -= 1;
            }
            Label::Unused | Label::Undecided => {}
        }
        self.labels[i] = Label::Undecided;
        self.undecided[u] += 1;
        self.undecided[v] += 1;
    }

    fn run(&mut self, i: usize) -> Step {
        if !self.budget.tick() {
            return Step::OutOfBudget;
        }
        if i == self.edges.len() {
            let e_ok = !self.nonempty_e || self.labels.contains(&Label::E);
            let j_ok = self.ends.is_none() || self.trail_connected();
            return if e_ok && j_ok {
                Step::Found
            } else {
                Step::Exhausted
            };
        }
        let choices: &[Label] = if self.forced_e[i] {
            &[Label::E]
        } else if self.ends.is_some() {
            &[Label::E, Label::P, Label::J, Label::Unused]
        } else {
            &[Label::E, Label::P, Label::Unused]
        };
        for &label in choices {
            if self.assign(i, label) {
                match self.run(i + 1) {
                    Step::Exhausted => self.unassign(i),
                    other => return other,
                }
            }
        }
        Step::Exhausted
    }

    fn collect(&self, label: Label) -> Vec<EdgeId> {
        (0..self.edges.len())
            .filter(|&i| self.labels[i] == label)
            .collect()
    }
}

/// Searches for an EPS-graph of `g` satisfying `c`.
pub fn find_eps(g: &Graph, c: &DegreeConstraint, budget: u64) -> Result<Outcome<EpsDecomposition>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    c.validate(g)?;
    let mut s = LabelSearch::new(g, c, None, budget);
    Ok(match s.run(0) {
        Step::Found => {
            let d = EpsDecomposition::new(s.collect(Label::E), s.collect(Label::P));
            debug_assert_eq!(verify_eps(g, &d), Ok(()));
            debug_assert!(c.admits(g, &d.e, &d.p));
            Outcome::Found(d)
        }
        Step::Exhausted => Outcome::NotFound,
        Step::OutOfBudget => Outcome::Unknown,
    })
}

/// Searches for a JEPS-graph of `g` whose trail has odd vertices exactly
/// `v` and `w`, satisfying `c`.
pub fn find_jeps(
    g: &Graph,
    v: Vertex,
    w: Vertex,
    c: &DegreeConstraint,
    budget: u64,
) -> Result<Outcome<JepsDecomposition>> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(Error::SameVertex(v));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    c.validate(g)?;
    let mut s = LabelSearch::new(g, c, Some((v, w)), budget);
    Ok(match s.run(0) {
        Step::Found => {
            let d = JepsDecomposition {
                e: s.collect(Label::E),
                p: s.collect(Label::P),
                j: s.collect(Label::J),
                ends: (v, w),
            };
            debug_assert_eq!(verify_jeps(g, &d), Ok(()));
            debug_assert!(c.admits(g, &d.e, &d.p));
            Outcome::Found(d)
        }
        Step::Exhausted => Outcome::NotFound,
        Step::OutOfBudget => Outcome::Unknown,
    })
}
