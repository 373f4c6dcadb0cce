//! Simple-cycle enumeration and the cycle searches built on it.
//!
//! Cycles are edge sequences, so the two edges of a digon form a cycle and
//! parallel edges give distinct cycles.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::decomposition::is_two_connected;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex, VertexSet};
use crate::search::{Budget, Outcome, DEFAULT_BUDGET};

/// A cycle given by its vertex sequence; `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CycleWitness {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// `|V(K) ∩ W|`.
    pub fn intersection_count(&self, w: &VertexSet) -> usize {
        self.vertices.iter().filter(|&&v| w.contains(v)).count()
    }

    /// Checks that this is a closed walk in `g` with distinct vertices and
    /// distinct edges.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let len = self.edges.len();
        if len < 2 || self.vertices.len() != len {
            return false;
        }
        let mut seen_v = self.vertices.clone();
        seen_v.sort_unstable();
        seen_v.dedup();
        let mut seen_e = self.edges.clone();
        seen_e.sort_unstable();
        seen_e.dedup();
        if seen_v.len() != len || seen_e.len() != len {
            return false;
        }
        (0..len).all(|i| {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % len]);
            match g.endpoints(self.edges[i]) {
                Ok((x, y)) => (x, y) == (a.min(b), a.max(b)),
                Err(_) => false,
            }
        })
    }
}

/// How a cycle enumeration ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Enumeration {
    /// Every cycle was visited.
    Complete,
    /// The visitor asked to stop.
    Stopped,
    /// The node cap was reached before the enumeration finished.
    CapHit,
}

/// Default node cap for exhaustive cycle enumeration.
pub const DEFAULT_CYCLE_CAP: u64 = 20_000_000;

struct CycleDfs<'g, F> {
    g: &'g Graph,
    root: Vertex,
    /// Only vertices `>= floor` may be used besides the root.
    floor: Vertex,
    on_path: Vec<bool>,
    vertices: Vec<Vertex>,
    edges: Vec<EdgeId>,
    budget: Budget,
    visit: F,
}

impl<F: FnMut(&CycleWitness) -> ControlFlow<()>> CycleDfs<'_, F> {
    fn run(&mut self, u: Vertex) -> Enumeration {
        if !self.budget.tick() {
            return Enumeration::CapHit;
        }
        for &(w, e) in self.g.incident(u) {
            if w == self.root {
                // Each cycle is seen in both directions; keep the one whose
                // first edge id is smaller than its closing edge id.
                if let Some(&first) = self.edges.first() {
                    if first < e {
                        let mut edges = self.edges.clone();
                        edges.push(e);
                        let cycle = CycleWitness {
                            vertices: self.vertices.clone(),
                            edges,
                        };
                        if (self.visit)(&cycle).is_break() {
                            return Enumeration::Stopped;
                        }
                    }
                }
            } else if w >= self.floor && !self.on_path[w] {
                self.on_path[w] = true;
                self.vertices.push(w);
                self.edges.push(e);
                let r = self.run(w);
                self.on_path[w] = false;
                self.vertices.pop();
                self.edges.pop();
                if r != Enumeration::Complete {
                    return r;
                }
            }
        }
        Enumeration::Complete
    }
}

fn rooted<F>(g: &Graph, root: Vertex, floor: Vertex, budget: &mut Budget, visit: F) -> Enumeration
where
    F: FnMut(&CycleWitness) -> ControlFlow<()>,
{
    let mut on_path = vec![false; g.order()];
    on_path[root] = true;
    let mut dfs = CycleDfs {
        g,
        root,
        floor,
        on_path,
        vertices: vec![root],
        edges: Vec::new(),
        budget: budget.clone(),
        visit,
    };
    let r = dfs.run(root);
    *budget = dfs.budget;
    r
}

/// Visits every cycle of `g` exactly once (each cycle is rooted at its
/// smallest vertex), charging DFS nodes against `cap`.
pub fn for_each_cycle<F>(g: &Graph, cap: u64, mut visit: F) -> Enumeration
where
    F: FnMut(&CycleWitness) -> ControlFlow<()>,
{
    let mut budget = Budget::new(cap);
    for root in g.vertices() {
        match rooted(g, root, root + 1, &mut budget, &mut visit) {
            Enumeration::Complete => {}
            other => return other,
        }
    }
    Enumeration::Complete
}

/// Visits every cycle through `root` exactly once.
pub fn for_each_cycle_through<F>(g: &Graph, root: Vertex, cap: u64, visit: F) -> Enumeration
where
    F: FnMut(&CycleWitness) -> ControlFlow<()>,
{
    let mut budget = Budget::new(cap);
    rooted(g, root, 0, &mut budget, visit)
}

/// All cycles of `g`, or `None` if the cap was hit.
pub fn all_cycles(g: &Graph, cap: u64) -> Option<Vec<CycleWitness>> {
    let mut out = Vec::new();
    match for_each_cycle(g, cap, |c| {
        out.push(c.clone());
        ControlFlow::Continue(())
    }) {
        Enumeration::Complete => Some(out),
        _ => None,
    }
}

/// Finds a cycle visiting every vertex of `required`.
pub fn find_cycle_through(g: &Graph, required: &VertexSet, budget: u64) -> Outcome<CycleWitness> {
    if required.iter().any(|&v| v >= g.order()) {
        return Outcome::NotFound;
    }
    let mut hit = None;
    let keep = |c: &CycleWitness| {
        if required.iter().all(|&v| c.contains(v)) {
            hit = Some(c.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    };
    let end = match required.iter().next() {
        Some(&root) => for_each_cycle_through(g, root, budget, keep),
        None => for_each_cycle(g, budget, keep),
    };
    match (end, hit) {
        (_, Some(c)) => Outcome::Found(c),
        (Enumeration::CapHit, None) => Outcome::Unknown,
        _ => Outcome::NotFound,
    }
}

/// A cycle maximizing `|V(K) ∩ W|`.
#[derive(Clone, Debug, Serialize)]
pub struct WCycle {
    pub cycle: CycleWitness,
    pub count: usize,
    /// `count >= 4`.
    pub sound: bool,
    /// Maximality is certified only when the enumeration completed.
    pub complete: bool,
}

/// The first cycle (in enumeration order) with the largest intersection with `w`.
pub fn best_w_cycle(g: &Graph, w: &VertexSet) -> Result<WCycle> {
    best_w_cycle_capped(g, w, DEFAULT_CYCLE_CAP)
}

pub fn best_w_cycle_capped(g: &Graph, w: &VertexSet, cap: u64) -> Result<WCycle> {
    if let Some(&bad) = w.iter().find(|&&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange {
            vertex: bad,
            n: g.order(),
        });
    }
    let mut best: Option<(usize, CycleWitness)> = None;
    let end = for_each_cycle(g, cap, |c| {
        let count = c.intersection_count(w);
        if best.as_ref().is_none_or(|(b, _)| count > *b) {
            best = Some((count, c.clone()));
        }
        if count == w.len() {
            // Nothing can beat a cycle through all of W.
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    let (count, cycle) = best.ok_or(Error::Acyclic)?;
    Ok(WCycle {
        cycle,
        count,
        sound: count >= 4,
        complete: end != Enumeration::CapHit,
    })
}

/// A cycle through `v` and `w1` that also contains `w2` whenever some cycle
/// through all three exists.
pub fn find_vw1w2_maximal_cycle(
    g: &Graph,
    v: Vertex,
    w1: Vertex,
    w2: Vertex,
) -> Result<CycleWitness> {
    for x in [v, w1, w2] {
        g.check_vertex(x)?;
    }
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let n = g.order();
    let all = VertexSet::new([v, w1, w2], n)?;
    match find_cycle_through(g, &all, DEFAULT_CYCLE_CAP) {
        Outcome::Found(c) => return Ok(c),
        Outcome::Unknown => {
            return Err(Error::InvalidInput("cycle enumeration cap reached".into()))
        }
        Outcome::NotFound => {}
    }
    match find_cycle_through(g, &VertexSet::new([v, w1], n)?, DEFAULT_BUDGET) {
        Outcome::Found(c) => Ok(c),
        // Two vertices of a 2-connected graph always share a cycle.
        _ => Err(Error::InvalidInput("no cycle through v and w1".into())),
    }
}

/// Whether `k` is a `[v; w1, w2]`-maximal cycle of `g`.
pub fn is_vw1w2_maximal(g: &Graph, k: &CycleWitness, v: Vertex, w1: Vertex, w2: Vertex) -> bool {
    if !(k.contains(v) && k.contains(w1)) {
        return false;
    }
    if k.contains(w2) {
        return true;
    }
    let all = VertexSet::new([v, w1, w2], g.order()).expect("vertices in range");
    matches!(
        find_cycle_through(g, &all, DEFAULT_CYCLE_CAP),
        Outcome::NotFound
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k4() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn set(v: &[usize], n: usize) -> VertexSet {
        VertexSet::new(v.iter().copied(), n).unwrap()
    }

    #[test]
    fn cycle_counts() {
        // K4 has 4 triangles and 3 four-cycles.
        assert_eq!(all_cycles(&k4(), u64::MAX).unwrap().len(), 7);
        assert_eq!(all_cycles(&cycle(6), u64::MAX).unwrap().len(), 1);
        let digon = g(2, &[(0, 1), (0, 1)]);
        let cs = all_cycles(&digon, u64::MAX).unwrap();
        assert_eq!(cs.len(), 1);
        assert!(cs[0].is_valid_in(&digon));
        // Theta graph: three internally disjoint 0-1 paths.
        let theta = g(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]);
        assert_eq!(all_cycles(&theta, u64::MAX).unwrap().len(), 3);
        for c in all_cycles(&theta, u64::MAX).unwrap() {
            assert!(c.is_valid_in(&theta));
        }
    }

    #[test]
    fn cycle_through_required() {
        let c6 = cycle(6);
        let found = find_cycle_through(&c6, &set(&[0, 2, 4], 6), 1000)
            .found()
            .unwrap();
        assert_eq!(found.len(), 6);
        let tree = g(4, &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(
            find_cycle_through(&tree, &set(&[0, 3], 4), 1000),
            Outcome::NotFound
        );
        let ham = find_cycle_through(&k4(), &set(&[0, 1, 2, 3], 4), 1000)
            .found()
            .unwrap();
        assert_eq!(ham.len(), 4);
        assert!(ham.is_valid_in(&k4()));
    }

    #[test]
    fn w_cycles() {
        let c5 = cycle(5);
        let best = best_w_cycle(&c5, &set(&[0, 1, 2, 3, 4], 5)).unwrap();
        assert_eq!((best.count, best.sound), (5, true));

        // Theta with branches 0-2-1, 0-3-5-1, 0-4-6-1; W on the long branches
        // and hub-free: any cycle uses two branches.
        let theta = g(
            7,
            &[
                (0, 2),
                (2, 1),
                (0, 3),
                (3, 5),
                (5, 1),
                (0, 4),
                (4, 6),
                (6, 1),
            ],
        );
        let w = set(&[3, 5, 4], 7);
        let best = best_w_cycle(&theta, &w).unwrap();
        assert_eq!(best.count, 3);
        assert!(!best.sound);
        assert!(best.complete);

        let tree = g(3, &[(0, 1), (1, 2)]);
        assert!(matches!(
            best_w_cycle(&tree, &w_empty()),
            Err(Error::Acyclic)
        ));
    }

    fn w_empty() -> VertexSet {
        VertexSet::default()
    }

    #[test]
    fn vw1w2_maximal() {
        let c5 = cycle(5);
        assert_eq!(find_vw1w2_maximal_cycle(&c5, 0, 2, 4).unwrap().len(), 5);

        // K4 minus edge 2-3: degree-3 vertices 0 and 1.
        let k4e = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let c = find_vw1w2_maximal_cycle(&k4e, 0, 1, 2).unwrap();
        assert!(c.contains(0) && c.contains(1) && c.contains(2));

        // K_{2,3}: no cycle contains all three vertices of the big side.
        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let all = set(&[2, 3, 4], 5);
        assert_eq!(find_cycle_through(&k23, &all, 10_000), Outcome::NotFound);
        let c = find_vw1w2_maximal_cycle(&k23, 2, 3, 4).unwrap();
        assert!(c.contains(2) && c.contains(3) && !c.contains(4));
        assert!(is_vw1w2_maximal(&k23, &c, 2, 3, 4));

        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert!(matches!(
            find_vw1w2_maximal_cycle(&p3, 0, 1, 2),
            Err(Error::NotTwoConnected)
        ));
    }
}
