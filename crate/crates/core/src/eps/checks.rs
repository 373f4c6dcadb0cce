//! Existence statements about EPS/JEPS-graphs, checked by exact search on
//! concrete graphs.
//!
//! Each checker validates the hypotheses first (returning
//! `Error::PreconditionUnmet` or `Error::NotTwoConnected` when they fail) and
//! then searches for the promised object. A `Violated` result is a
//! counterexample to the statement; `Unknown` only means the budget ran out.

use serde::Serialize;

use crate::decomposition::{block_forest, chain_kind_of, is_two_connected, BlockKind, ChainKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::search::Outcome;

use super::cycles::{best_w_cycle, is_vw1w2_maximal, CycleWitness};
use super::{find_eps, find_jeps, DegreeConstraint, EpsDecomposition, JepsDecomposition, PCap};

/// Verdict of one instance of an existence statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "kebab-case")]
pub enum Check<T> {
    Holds(T),
    /// The hypotheses of the statement do not apply to this instance.
    Vacuous,
    Violated,
    Unknown,
}

impl<T> Check<T> {
    pub fn is_violation(&self) -> bool {
        matches!(self, Check::Violated)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Check::Unknown)
    }

    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds(_))
    }
}

impl<T> From<Outcome<T>> for Check<T> {
    fn from(o: Outcome<T>) -> Self {
        match o {
            Outcome::Found(t) => Check::Holds(t),
            Outcome::NotFound => Check::Violated,
            Outcome::Unknown => Check::Unknown,
        }
    }
}

fn require_two_connected(g: &Graph) -> Result<()> {
    if is_two_connected(g) {
        Ok(())
    } else {
        Err(Error::NotTwoConnected)
    }
}

fn require_on_cycle(k: &CycleWitness, g: &Graph, vs: &[Vertex]) -> Result<()> {
    if !k.is_valid_in(g) {
        return Err(Error::InvalidInput("not a cycle of the graph".into()));
    }
    if let Some(v) = vs.iter().find(|&&v| !k.contains(v)) {
        return Err(Error::PreconditionUnmet(format!(
            "vertex {v} is not on the cycle"
        )));
    }
    Ok(())
}

fn require_distinct(vs: &[Vertex]) -> Result<()> {
    for (i, &a) in vs.iter().enumerate() {
        if vs[..i].contains(&a) {
            return Err(Error::SameVertex(a));
        }
    }
    Ok(())
}

/// Which half of the Theorem 1 dichotomy a witness belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "kebab-case")]
pub enum Dichotomy {
    /// An EPS-graph with `d_P(v) = 0 = d_P(w)`.
    BranchI(EpsDecomposition),
    /// A JEPS-graph whose trail has odd vertices exactly `v, w`, with
    /// `d_P(v) = 0 = d_P(w)`.
    BranchII(JepsDecomposition),
}

/// For distinct `v, w` of a 2-connected graph, finds a witness for one of the
/// two branches, preferring the first. `NotFound` refutes both.
pub fn check_theorem1(g: &Graph, v: Vertex, w: Vertex, budget: u64) -> Result<Outcome<Dichotomy>> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(Error::SameVertex(v));
    }
    require_two_connected(g)?;
    let caps = DegreeConstraint::new()
        .cap(v, PCap::Zero)
        .cap(w, PCap::Zero);
    let first = find_eps(g, &caps, budget)?;
    if let Outcome::Found(d) = first {
        return Ok(Outcome::Found(Dichotomy::BranchI(d)));
    }
    let second = find_jeps(g, v, w, &caps, budget)?;
    Ok(match (first, second) {
        (_, Outcome::Found(d)) => Outcome::Found(Dichotomy::BranchII(d)),
        (Outcome::NotFound, Outcome::NotFound) => Outcome::NotFound,
        _ => Outcome::Unknown,
    })
}

/// Theorem A instance: if the `W`-maximal cycle found for the 5-set `w` is
/// `W`-sound, a `W`-EPS-graph containing it in `E` must exist.
pub fn check_theorem_a(g: &Graph, w: &VertexSet, budget: u64) -> Result<Check<EpsDecomposition>> {
    require_two_connected(g)?;
    if w.len() != 5 {
        return Err(Error::InvalidQuery(format!(
            "W must have 5 vertices, got {}",
            w.len()
        )));
    }
    let best = best_w_cycle(g, w)?;
    if !best.complete {
        return Ok(Check::Unknown);
    }
    if !best.sound {
        return Ok(Check::Vacuous);
    }
    let c = DegreeConstraint::soft(w.as_slice()).with_cycle(best.cycle);
    Ok(find_eps(g, &c, budget)?.into())
}

/// Theorem B instance: `k` passes through `v, w1, w2, w3`; a
/// `[v; w1, w2, w3]`-EPS-graph with `k ⊆ E` must exist.
pub fn check_theorem_b(
    g: &Graph,
    v: Vertex,
    ws: [Vertex; 3],
    k: &CycleWitness,
    budget: u64,
) -> Result<Check<EpsDecomposition>> {
    require_two_connected(g)?;
    let all = [v, ws[0], ws[1], ws[2]];
    require_distinct(&all)?;
    require_on_cycle(k, g, &all)?;
    let c = DegreeConstraint::bracket(v, &ws).with_cycle(k.clone());
    Ok(find_eps(g, &c, budget)?.into())
}

/// Theorem C instance: `k` is `[v; w1, w2]`-maximal; a `[v; w1, w2]`-EPS-graph
/// with `k ⊆ E` must exist.
pub fn check_theorem_c(
    g: &Graph,
    v: Vertex,
    w1: Vertex,
    w2: Vertex,
    k: &CycleWitness,
    budget: u64,
) -> Result<Check<EpsDecomposition>> {
    require_two_connected(g)?;
    require_distinct(&[v, w1, w2])?;
    require_on_cycle(k, g, &[v, w1])?;
    if !is_vw1w2_maximal(g, k, v, w1, w2) {
        return Err(Error::PreconditionUnmet(
            "cycle is not [v; w1, w2]-maximal".into(),
        ));
    }
    let c = DegreeConstraint::bracket(v, &[w1, w2]).with_cycle(k.clone());
    Ok(find_eps(g, &c, budget)?.into())
}

/// Theorem D instance: `k` passes through `v, w`; a `[v; w]`-EPS-graph with
/// `k ⊆ E` must exist.
pub fn check_theorem_d(
    g: &Graph,
    v: Vertex,
    w: Vertex,
    k: &CycleWitness,
    budget: u64,
) -> Result<Check<EpsDecomposition>> {
    require_two_connected(g)?;
    require_distinct(&[v, w])?;
    require_on_cycle(k, g, &[v, w])?;
    let c = DegreeConstraint::bracket(v, &[w]).with_cycle(k.clone());
    Ok(find_eps(g, &c, budget)?.into())
}

/// Outcome of both parts of Lemma 1 for one ordered pair `(v, w)`.
#[derive(Clone, Debug, Serialize)]
pub struct Lemma1Entry {
    pub v: Vertex,
    pub w: Vertex,
    /// Whether the endblock holding `v` is 2-connected (strengthened caps).
    pub v_block_two_connected: bool,
    pub part_i: Check<EpsDecomposition>,
    pub part_ii: Check<JepsDecomposition>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma1Report {
    pub entries: Vec<Lemma1Entry>,
}

impl Lemma1Report {
    pub fn violations(&self) -> impl Iterator<Item = &Lemma1Entry> {
        self.entries
            .iter()
            .filter(|e| e.part_i.is_violation() || e.part_ii.is_violation())
    }

    pub fn unknowns(&self) -> impl Iterator<Item = &Lemma1Entry> {
        self.entries
            .iter()
            .filter(|e| e.part_i.is_unknown() || e.part_ii.is_unknown())
    }
}

/// Ordered pairs `(v, w)` of non-cutvertices lying in different endblocks of
/// a block chain with at least one cutvertex, each with the index of `v`'s
/// block.
pub fn endblock_pairs(g: &Graph) -> Result<Vec<(Vertex, Vertex, usize)>> {
    if !g.is_connected() {
        return Err(Error::PreconditionUnmet("graph is disconnected".into()));
    }
    let bf = block_forest(g);
    if chain_kind_of(&bf) != ChainKind::NonTrivial || bf.cutvertices.is_empty() {
        return Err(Error::PreconditionUnmet(
            "not a block chain with a cutvertex".into(),
        ));
    }
    let home = |v: Vertex| {
        bf.blocks_of(v)
            .next()
            .expect("every vertex lies in a block")
    };
    let mut pairs = Vec::new();
    for v in g.vertices().filter(|&v| !bf.cutvertices.contains(v)) {
        for w in g
            .vertices()
            .filter(|&w| w != v && !bf.cutvertices.contains(w))
        {
            let (bv, bw) = (home(v), home(w));
            if bv != bw && bf.blocks[bv].endblock && bf.blocks[bw].endblock {
                pairs.push((v, w, bv));
            }
        }
    }
    Ok(pairs)
}

/// Checks both parts of Lemma 1 for every valid ordered pair of `g`.
pub fn check_lemma1(g: &Graph, budget: u64) -> Result<Lemma1Report> {
    let pairs = endblock_pairs(g)?;
    let bf = block_forest(g);
    let mut entries = Vec::with_capacity(pairs.len());
    for (v, w, bv) in pairs {
        let strong = bf.blocks[bv].kind == BlockKind::Cyclic;
        let caps_i = if strong {
            DegreeConstraint::bracket(v, &[w])
        } else {
            DegreeConstraint::soft(&[v, w])
        };
        let part_i = find_eps(g, &caps_i, budget)?.into();
        let caps_ii = DegreeConstraint::new()
            .cap(v, PCap::Zero)
            .cap(w, PCap::Zero)
            .with_saturation(bf.cutvertices.clone(), 1);
        let part_ii = find_jeps(g, v, w, &caps_ii, budget)?.into();
        entries.push(Lemma1Entry {
            v,
            w,
            v_block_two_connected: strong,
            part_i,
            part_ii,
        });
    }
    Ok(Lemma1Report { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eps::cycles::{all_cycles, find_vw1w2_maximal_cycle};
    use crate::eps::{verify_eps, verify_jeps};

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k4() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    const B: u64 = 1_000_000;

    #[test]
    fn theorem1_on_cycles_takes_branch_i() {
        for n in 3..8 {
            let c = cycle(n);
            for w in 1..n {
                match check_theorem1(&c, 0, w, B).unwrap() {
                    Outcome::Found(Dichotomy::BranchI(d)) => {
                        assert_eq!(d.e.len(), n);
                        assert!(d.p.is_empty());
                    }
                    other => panic!("{other:?}"),
                }
            }
        }
    }

    #[test]
    fn theorem1_on_k4_and_theta() {
        let k = k4();
        for v in 0..4 {
            for w in v + 1..4 {
                let r = check_theorem1(&k, v, w, B).unwrap();
                match r {
                    Outcome::Found(Dichotomy::BranchI(d)) => assert_eq!(verify_eps(&k, &d), Ok(())),
                    Outcome::Found(Dichotomy::BranchII(d)) => {
                        assert_eq!(verify_jeps(&k, &d), Ok(()))
                    }
                    other => panic!("{other:?}"),
                }
            }
        }
        // Theta with branch vertices 0 and 1 (K_{2,3}): every EPS-graph is a
        // 4-cycle plus a pendant P-edge at 0 or 1, so branch i is impossible.
        let theta = g(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]);
        match check_theorem1(&theta, 0, 1, B).unwrap() {
            Outcome::Found(Dichotomy::BranchII(d)) => {
                assert_eq!(verify_jeps(&theta, &d), Ok(()));
                assert_eq!(d.p_degrees(&theta)[0], 0);
                assert_eq!(d.p_degrees(&theta)[1], 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn theorem1_rejects_non_blocks() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert!(matches!(
            check_theorem1(&p3, 0, 2, B),
            Err(Error::NotTwoConnected)
        ));
        assert!(matches!(
            check_theorem1(&k4(), 2, 2, B),
            Err(Error::SameVertex(2))
        ));
    }

    #[test]
    fn lemma1_bowtie() {
        let bowtie = g(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        let report = check_lemma1(&bowtie, B).unwrap();
        // v in {1,2}, w in {3,4} and vice versa.
        assert_eq!(report.entries.len(), 8);
        assert!(report
            .entries
            .iter()
            .all(|e| e.part_i.holds() && e.part_ii.holds()));
        assert!(report.entries.iter().all(|e| e.v_block_two_connected));
    }

    #[test]
    fn lemma1_path_and_triangle_bridge_triangle() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let report = check_lemma1(&p4, B).unwrap();
        assert_eq!(report.entries.len(), 2);
        for e in &report.entries {
            match &e.part_ii {
                Check::Holds(d) => assert_eq!(d.j, vec![0, 1, 2]),
                other => panic!("{other:?}"),
            }
        }
        let tbt = g(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        let report = check_lemma1(&tbt, B).unwrap();
        assert_eq!(report.entries.len(), 8);
        assert_eq!(report.violations().count(), 0);
        assert_eq!(report.unknowns().count(), 0);
    }

    #[test]
    fn lemma1_preconditions() {
        assert!(matches!(
            check_lemma1(&k4(), B),
            Err(Error::PreconditionUnmet(_))
        ));
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(matches!(
            check_lemma1(&star, B),
            Err(Error::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn theorems_b_c_d_on_k4() {
        let k = k4();
        let cycles = all_cycles(&k, u64::MAX).unwrap();
        for c in cycles.iter().filter(|c| c.len() == 4) {
            assert!(check_theorem_b(&k, 0, [1, 2, 3], c, B).unwrap().holds());
        }
        for c in &cycles {
            if c.contains(0) && c.contains(1) {
                assert!(check_theorem_d(&k, 0, 1, c, B).unwrap().holds());
            }
        }
        let k = find_vw1w2_maximal_cycle(&k4(), 0, 1, 2).unwrap();
        assert!(check_theorem_c(&k4(), 0, 1, 2, &k, B).unwrap().holds());
        let tri = cycles
            .iter()
            .find(|c| c.len() == 3 && !c.contains(2))
            .unwrap();
        assert!(matches!(
            check_theorem_c(&k4(), 0, 1, 2, tri, B),
            Err(Error::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn theorem_a_on_c5_and_k5() {
        let w = VertexSet::new(0..5, 5).unwrap();
        assert!(check_theorem_a(&cycle(5), &w, B).unwrap().holds());
        let k5 = g(
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
            ],
        );
        assert!(check_theorem_a(&k5, &w, B).unwrap().holds());
        // K_{2,3} plus nothing: cycles meet at most 4 vertices.
        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(check_theorem_a(&k23, &w, B).unwrap().holds());
    }
}
