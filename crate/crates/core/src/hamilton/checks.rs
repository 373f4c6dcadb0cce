//! Existence statements about hamiltonian cycles and paths in squares,
//! checked by exact search on concrete graphs.
//!
//! Same conventions as [`crate::eps::checks`]: hypotheses are validated
//! first, then a `Violated` verdict is a counterexample and `Unknown` only a
//! spent budget.

use serde::Serialize;

use crate::decomposition::{is_dt_graph, is_two_connected, v2};
use crate::eps::checks::{endblock_pairs, Check};
use crate::eps::{find_eps, DegreeConstraint, PCap};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::search::Outcome;

use super::search::HamHost;
use super::{g_plus, SquareCycle};

fn require_two_connected(g: &Graph) -> Result<()> {
    if is_two_connected(g) {
        Ok(())
    } else {
        Err(Error::NotTwoConnected)
    }
}

fn require_pair(g: &Graph, v: Vertex, w: Vertex) -> Result<()> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(Error::SameVertex(v));
    }
    Ok(())
}

/// `[v; w]`-hamiltonian cycle of `G²` for distinct `v, w` of a 2-connected
/// graph: both cycle edges at `v` in `G`, a further one at `w`.
pub fn check_theorem_f(g: &Graph, v: Vertex, w: Vertex, budget: u64) -> Result<Check<SquareCycle>> {
    require_pair(g, v, w)?;
    require_two_connected(g)?;
    let host = HamHost::square_of(g)?;
    Ok(host
        .find_cycle(Some(v), &[w], budget)?
        .map(|r| SquareCycle {
            vertices: r.vertices,
        })
        .into())
}

/// `xy`-hamiltonian path of `G²` with an edge of `G` at `q ∈ {x, y}`.
pub fn check_theorem_g2(
    g: &Graph,
    x: Vertex,
    y: Vertex,
    q: Vertex,
    budget: u64,
) -> Result<Check<Vec<Vertex>>> {
    require_pair(g, x, y)?;
    if q != x && q != y {
        return Err(Error::InvalidQuery(format!(
            "q = {q} must be one of the endpoints"
        )));
    }
    require_two_connected(g)?;
    let host = HamHost::square_of(g)?;
    Ok(host
        .find_path(x, y, &[q], budget)?
        .map(|r| r.vertices)
        .into())
}

/// Both parts of Corollary 1 for one pair.
#[derive(Clone, Debug, Serialize)]
pub struct Corollary1Entry {
    pub v: Vertex,
    pub w: Vertex,
    /// `v`'s endblock is 2-connected, so part (i) asks for two edges at `v`.
    pub strong: bool,
    pub part_i: Check<SquareCycle>,
    pub part_ii: Check<Vec<Vertex>>,
}

impl Corollary1Entry {
    pub fn is_violation(&self) -> bool {
        self.part_i.is_violation() || self.part_ii.is_violation()
    }

    pub fn is_unknown(&self) -> bool {
        self.part_i.is_unknown() || self.part_ii.is_unknown()
    }
}

/// `v, w` must be non-cutvertices in different endblocks of the non-trivial
/// block chain `b`.
pub fn check_corollary1(b: &Graph, v: Vertex, w: Vertex, budget: u64) -> Result<Corollary1Entry> {
    require_pair(b, v, w)?;
    if b.order() < 3 {
        return Err(Error::PreconditionUnmet("fewer than 3 vertices".into()));
    }
    let pairs = endblock_pairs(b)?;
    let Some(&(_, _, bv)) = pairs.iter().find(|&&(a, c, _)| (a, c) == (v, w)) else {
        return Err(Error::PreconditionUnmet(
            "v, w are not non-cutvertices of different endblocks".into(),
        ));
    };
    let forest = crate::decomposition::block_forest(b);
    let strong = forest.blocks[bv].is_two_connected();
    let host = HamHost::square_of(b)?;
    let cycle = if strong {
        host.find_cycle(Some(v), &[w], budget)?
    } else {
        host.find_cycle(None, &[v, w], budget)?
    };
    let part_i = cycle
        .map(|r| SquareCycle {
            vertices: r.vertices,
        })
        .into();
    let part_ii = host
        .find_path(v, w, &[v, w], budget)?
        .map(|r| r.vertices)
        .into();
    Ok(Corollary1Entry {
        v,
        w,
        strong,
        part_i,
        part_ii,
    })
}

/// Which alternative of Corollary 2 a witness belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "kebab-case")]
pub enum Corollary2Branch {
    /// Hamiltonian cycle of `G² - x2` whose two edges at `x1` lie in `G`.
    BranchI(SquareCycle),
    /// `x1x2`-hamiltonian path of `G²` whose first and last edges lie in `G`.
    BranchII { path: Vec<Vertex> },
}

/// Checks the hypotheses of Corollary 2 for `(x1, x2)`.
pub fn corollary2_applies(g: &Graph, x1: Vertex, x2: Vertex) -> Result<()> {
    require_pair(g, x1, x2)?;
    if !is_two_connected(g) || !is_dt_graph(g) {
        return Err(Error::PreconditionUnmet(
            "not a 2-connected DT-graph".into(),
        ));
    }
    if g.adjacent(x1, x2) {
        return Err(Error::PreconditionUnmet("x1 and x2 are adjacent".into()));
    }
    let two = v2(g);
    for x in [x1, x2] {
        if g.neighbors(x).iter().any(|&u| !two.contains(u)) {
            return Err(Error::PreconditionUnmet(format!(
                "vertex {x} has a neighbor of degree other than 2"
            )));
        }
    }
    Ok(())
}

/// Finds a witness for one alternative of Corollary 2, preferring (i).
/// `NotFound` refutes both.
pub fn check_corollary2(
    g: &Graph,
    x1: Vertex,
    x2: Vertex,
    budget: u64,
) -> Result<Outcome<Corollary2Branch>> {
    corollary2_applies(g, x1, x2)?;
    let host = HamHost::square_of(g)?;
    let minus = host.without(x2);
    let first = if minus.active_count() >= 3 {
        minus.find_cycle(Some(x1), &[], budget)?
    } else {
        Outcome::NotFound
    };
    if let Outcome::Found(r) = first {
        return Ok(Outcome::Found(Corollary2Branch::BranchI(SquareCycle {
            vertices: r.vertices,
        })));
    }
    let second = host.find_path(x1, x2, &[x1, x2], budget)?;
    Ok(match (first, second) {
        (_, Outcome::Found(r)) => Outcome::Found(Corollary2Branch::BranchII { path: r.vertices }),
        (Outcome::NotFound, Outcome::NotFound) => Outcome::NotFound,
        _ => Outcome::Unknown,
    })
}

/// Weak form of Observation (*) on `G⁺ = G + y(x1, x2)`: if `G⁺` has an
/// EPS-graph with `d_P(x1), d_P(x2) <= 1` whose `E` contains a cycle through
/// `y`, then `(G⁺)²` has a hamiltonian cycle through `yx1` and `yx2`.
/// `Vacuous` when no such EPS-graph exists.
pub fn check_observation_star(
    g: &Graph,
    x1: Vertex,
    x2: Vertex,
    budget: u64,
) -> Result<Check<SquareCycle>> {
    let (gp, y) = g_plus(g, x1, x2)?;
    if !gp.is_connected() {
        return Err(Error::Disconnected);
    }
    let c = DegreeConstraint::new()
        .cap(x1, PCap::AtMostOne)
        .cap(x2, PCap::AtMostOne);
    let Some(k) = first_cycle_through(&gp, y) else {
        return Ok(Check::Vacuous);
    };
    match find_eps(&gp, &c.with_cycle(k), budget)? {
        Outcome::Found(_) => {}
        Outcome::NotFound => return Ok(Check::Vacuous),
        Outcome::Unknown => return Ok(Check::Unknown),
    }
    let host = HamHost::square_of(&gp)?;
    Ok(host
        .find_cycle(Some(y), &[], budget)?
        .map(|r| SquareCycle {
            vertices: r.vertices,
        })
        .into())
}

fn first_cycle_through(g: &Graph, v: Vertex) -> Option<crate::eps::cycles::CycleWitness> {
    let mut found = None;
    crate::eps::cycles::for_each_cycle_through(g, v, crate::eps::cycles::DEFAULT_CYCLE_CAP, |c| {
        found = Some(c.clone());
        std::ops::ControlFlow::Break(())
    });
    found
}
