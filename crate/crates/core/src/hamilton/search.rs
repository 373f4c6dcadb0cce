//! Bitset backtracking for hamiltonian paths and cycles in a power of a
//! graph, with side conditions on which path edges must be edges of the base
//! graph.
//!
//! The path is grown from its start vertex, trying neighbors in ascending
//! label order. A branch is cut as soon as
//!
//! * the unvisited vertices stop being connected, or cannot be reached from
//!   the current end (or, for cycles, from the start vertex);
//! * an unvisited vertex has too few available neighbors to be passed
//!   through (two, or one for the target);
//! * a vertex that needs a base edge on the path was passed through on two
//!   non-base edges, or has no base neighbor left.
//!
//! Distinctness of the base edges claimed by different vertices is settled
//! on complete paths by a small exhaustive assignment.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::powers::square;
use crate::search::{Budget, Outcome, Step};

/// Largest order the bitset searches support.
pub const MAX_SEARCH_ORDER: usize = 64;

#[inline]
fn bit(v: Vertex) -> u64 {
    1u64 << v
}

fn bits(mut mask: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as Vertex;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A graph to route hamiltonian paths through (`adj`, usually `G²`) together
/// with the base graph whose edges side conditions refer to.
#[derive(Clone, Debug)]
pub struct HamHost {
    n: usize,
    adj: Vec<u64>,
    base: Vec<u64>,
    active: u64,
}

fn masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.incident(v).iter().fold(0, |m, &(w, _)| m | bit(w)))
        .collect()
}

impl HamHost {
    /// Routes in `G²`, with `G` as the base graph.
    pub fn square_of(g: &Graph) -> Result<Self> {
        Self::routed(&square(g), g)
    }

    /// Routes in `routing`, with `base` as the base graph (same vertex set).
    pub fn routed(routing: &Graph, base: &Graph) -> Result<Self> {
        let n = routing.order();
        if n > MAX_SEARCH_ORDER {
            return Err(Error::TooLarge {
                n,
                max: MAX_SEARCH_ORDER,
            });
        }
        if base.order() != n {
            return Err(Error::InvalidInput(
                "routing and base graphs differ in order".into(),
            ));
        }
        Ok(HamHost {
            n,
            adj: masks(routing),
            base: masks(base),
            active: if n == 64 { u64::MAX } else { bit(n) - 1 },
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of vertices still in play.
    pub fn active_count(&self) -> usize {
        self.active.count_ones() as usize
    }

    pub fn is_active(&self, v: Vertex) -> bool {
        v < self.n && self.active & bit(v) != 0
    }

    /// The same host with `v` removed.
    pub fn without(&self, v: Vertex) -> Self {
        let mut h = self.clone();
        h.active &= !bit(v);
        h
    }

    pub fn routes(&self, a: Vertex, b: Vertex) -> bool {
        self.adj[a] & bit(b) != 0
    }

    pub fn is_base_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.base[a] & bit(b) != 0
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if self.is_active(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Hamiltonian path from `s` to `t` over the active vertices; every vertex
    /// in `needs_base` gets its own base edge on the path.
    pub fn find_path(
        &self,
        s: Vertex,
        t: Vertex,
        needs_base: &[Vertex],
        budget: u64,
    ) -> Result<Outcome<RoutedPath>> {
        self.check(s)?;
        self.check(t)?;
        for &v in needs_base {
            self.check(v)?;
        }
        if s == t {
            return Err(Error::SameVertex(s));
        }
        let mut search = Engine::new(self, s, Some(t), None, needs_base, budget);
        Ok(search.solve())
    }

    /// Hamiltonian cycle over the active vertices. Both cycle edges at
    /// `full` must be base edges; every vertex in `needs_base` gets a further
    /// base edge of its own.
    pub fn find_cycle(
        &self,
        full: Option<Vertex>,
        needs_base: &[Vertex],
        budget: u64,
    ) -> Result<Outcome<RoutedPath>> {
        let count = self.active_count();
        if count < 3 {
            return Err(Error::TooSmall(count));
        }
        if let Some(v) = full {
            self.check(v)?;
        }
        for &v in needs_base {
            self.check(v)?;
        }
        let start = full
            .or_else(|| needs_base.first().copied())
            .unwrap_or_else(|| self.active.trailing_zeros() as Vertex);
        let mut search = Engine::new(self, start, None, full, needs_base, budget);
        Ok(search.solve())
    }
}

/// A hamiltonian path or cycle found by the engine, with the base edge
/// (as a vertex pair) assigned to each vertex of `needs_base`, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoutedPath {
    pub vertices: Vec<Vertex>,
    pub assigned: Vec<(Vertex, Vertex)>,
}

struct Engine<'h> {
    host: &'h HamHost,
    start: Vertex,
    target: Option<Vertex>,
    full: Option<Vertex>,
    needs_base: Vec<Vertex>,
    needs_mask: u64,
    path: Vec<Vertex>,
    visited: u64,
    budget: Budget,
    assigned: Vec<(Vertex, Vertex)>,
}

impl<'h> Engine<'h> {
    fn new(
        host: &'h HamHost,
        start: Vertex,
        target: Option<Vertex>,
        full: Option<Vertex>,
        needs_base: &[Vertex],
        budget: u64,
    ) -> Self {
        Engine {
            host,
            start,
            target,
            full,
            needs_base: needs_base.to_vec(),
            needs_mask: needs_base.iter().fold(0, |m, &v| m | bit(v)),
            path: Vec::with_capacity(host.n),
            visited: 0,
            budget: Budget::new(budget),
            assigned: Vec::new(),
        }
    }

    fn solve(&mut self) -> Outcome<RoutedPath> {
        self.path.push(self.start);
        self.visited = bit(self.start);
        let step = if self.host.active == self.visited {
            // Single-vertex paths cannot occur (s != t) and cycles need 3.
            Step::Exhausted
        } else {
            self.extend(self.start)
        };
        match step {
            Step::Found => Outcome::Found(RoutedPath {
                vertices: self.path.clone(),
                assigned: self.assigned.clone(),
            }),
            Step::Exhausted => Outcome::NotFound,
            Step::OutOfBudget => Outcome::Unknown,
        }
    }

    fn extend(&mut self, cur: Vertex) -> Step {
        if !self.budget.tick() {
            return Step::OutOfBudget;
        }
        let h = self.host;
        let remaining = h.active & !self.visited;
        if remaining == 0 {
            return if self.complete_ok() {
                Step::Found
            } else {
                Step::Exhausted
            };
        }
        let mut cand = h.adj[cur] & remaining;
        if let Some(t) = self.target {
            if remaining != bit(t) {
                cand &= !bit(t);
            }
        }
        let at_start = self.path.len() == 1;
        if at_start
            && (self.full == Some(cur) || self.needs_mask & bit(cur) != 0 && self.target.is_some())
        {
            cand &= h.base[cur];
        }
        let prev = if at_start {
            None
        } else {
            Some(self.path[self.path.len() - 2])
        };
        for nxt in bits(cand) {
            if let Some(p) = prev {
                if self.needs_mask & bit(cur) != 0
                    && !h.is_base_edge(p, cur)
                    && !h.is_base_edge(cur, nxt)
                {
                    continue;
                }
            }
            self.visited |= bit(nxt);
            self.path.push(nxt);
            let step = if self.viable(nxt) {
                self.extend(nxt)
            } else {
                Step::Exhausted
            };
            if step == Step::Found {
                return step;
            }
            self.path.pop();
            self.visited &= !bit(nxt);
            if step == Step::OutOfBudget {
                return step;
            }
        }
        Step::Exhausted
    }

    /// Necessary conditions for completing the path from `end`.
    fn viable(&self, end: Vertex) -> bool {
        let h = self.host;
        let remaining = h.active & !self.visited;
        if remaining == 0 {
            return true;
        }
        if h.adj[end] & remaining == 0 {
            return false;
        }
        let closing = match self.target {
            Some(_) => 0,
            None => {
                if h.adj[self.start] & remaining == 0 {
                    return false;
                }
                if self.full.is_some() && h.base[self.start] & remaining == 0 {
                    return false;
                }
                bit(self.start)
            }
        };
        let available = remaining | bit(end) | closing;
        for u in bits(remaining) {
            let need = if Some(u) == self.target { 1 } else { 2 };
            if (h.adj[u] & available & !bit(u)).count_ones() < need {
                return false;
            }
            if self.needs_mask & bit(u) != 0 && h.base[u] & available == 0 {
                return false;
            }
        }
        // Connectivity of the unvisited vertices.
        let first = remaining & remaining.wrapping_neg();
        let mut seen = first;
        let mut frontier = first;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as Vertex;
            frontier &= frontier - 1;
            let fresh = h.adj[v] & remaining & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == remaining
    }

    /// Final check on a spanning path: closing edge for cycles, the `full`
    /// vertex's two base edges, and a distinct base edge per `needs_base`
    /// vertex.
    fn complete_ok(&mut self) -> bool {
        let h = self.host;
        let len = self.path.len();
        let last = self.path[len - 1];
        let mut edges: Vec<(Vertex, Vertex)> = self.path.windows(2).map(|w| (w[0], w[1])).collect();
        if self.target.is_none() {
            if !h.routes(last, self.start) {
                return false;
            }
            edges.push((last, self.start));
        }
        let mut taken = vec![false; edges.len()];
        if let Some(v) = self.full {
            // The cycle starts at `full`: its edges are the first and the closing one.
            let (first, closing) = (0, edges.len() - 1);
            debug_assert_eq!(self.start, v);
            if !h.is_base_edge(edges[first].0, edges[first].1)
                || !h.is_base_edge(edges[closing].0, edges[closing].1)
            {
                return false;
            }
            taken[first] = true;
            taken[closing] = true;
        }
        let mut choice = Vec::with_capacity(self.needs_base.len());
        if assign(&self.needs_base, &edges, h, &mut taken, &mut choice) {
            self.assigned = choice.into_iter().map(|i| edges[i]).collect();
            true
        } else {
            false
        }
    }
}

/// Picks, for each vertex in order, a distinct untaken base edge of `edges`
/// incident to it. Lower-indexed edges are preferred.
fn assign(
    vertices: &[Vertex],
    edges: &[(Vertex, Vertex)],
    h: &HamHost,
    taken: &mut [bool],
    choice: &mut Vec<usize>,
) -> bool {
    let Some((&v, rest)) = vertices.split_first() else {
        return true;
    };
    for (i, &(a, b)) in edges.iter().enumerate() {
        if !taken[i] && (a == v || b == v) && h.is_base_edge(a, b) {
            taken[i] = true;
            choice.push(i);
            if assign(rest, edges, h, taken, choice) {
                return true;
            }
            choice.pop();
            taken[i] = false;
        }
    }
    false
}
