//! Immutable loopless multigraphs with dense vertex labels and stable edge ids.
//!
//! Vertices are `0..n`. Edges keep the id they were given at construction
//! (their position in the input list), so witnesses produced by the searches
//! can always be traced back to the caller's edge list. Parallel edges are
//! allowed and get distinct ids; loops are rejected.
//!
//! Every operation that "modifies" a graph returns a fresh value together with
//! a label map from the new labels back to the old ones.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    simple: bool,
}

impl Graph {
    /// Builds a graph on `n` vertices; edge `i` of the input gets id `i`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            let id = list.len();
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            list.push((a, b));
            adj[a].push((b, id));
            adj[b].push((a, id));
        }
        let simple = adj.iter().all(|inc| {
            let mut nbrs: Vec<_> = inc.iter().map(|&(w, _)| w).collect();
            nbrs.sort_unstable();
            nbrs.windows(2).all(|p| p[0] != p[1])
        });
        Ok(Graph {
            n,
            edges: list,
            adj,
            simple,
        })
    }

    /// The graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            simple: true,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    /// Edge endpoints indexed by edge id, each normalized to `(min, max)`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(Vertex, Vertex)> {
        self.edges.get(e).copied().ok_or(Error::UnknownEdgeId(e))
    }

    /// `(neighbor, edge id)` pairs incident to `v`, one per edge.
    ///
    /// Panics if `v` is out of range.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Degree counting edge multiplicity.
    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Distinct neighbors of `v`, ascending.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut nbrs: Vec<_> = self.adj[v].iter().map(|&(w, _)| w).collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        nbrs
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Smallest edge id joining `u` and `v`.
    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u]
            .iter()
            .filter(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .min()
    }

    /// Breadth-first distances on the underlying simple graph; `None` marks
    /// unreachable vertices.
    pub fn distances_from(&self, s: Vertex) -> Result<Vec<Option<usize>>> {
        self.check_vertex(s)?;
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &(w, _) in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_labels().iter().all(|&c| c == 0)
    }

    /// Connected component index per vertex, numbered by smallest member.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Drops parallel edges, keeping the first occurrence of each pair.
    pub fn underlying_simple(&self) -> Graph {
        if self.simple {
            return self.clone();
        }
        let mut seen = std::collections::HashSet::new();
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|&pair| seen.insert(pair))
            .collect();
        Graph::new(self.n, edges).expect("edges of a valid graph")
    }

    /// Subgraph induced by `set`; the map sends new labels to old ones.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        if let Some(&v) = set.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let map: Vec<Vertex> = set.iter().copied().collect();
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            new_label[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_label[u] != usize::MAX && new_label[v] != usize::MAX)
            .map(|&(u, v)| (new_label[u], new_label[v]));
        Ok((Graph::new(map.len(), edges)?, map))
    }

    /// Removes the given edges; the map sends new edge ids to old ones.
    pub fn delete_edges(&self, ids: &[EdgeId]) -> Result<(Graph, Vec<EdgeId>)> {
        let mut drop = vec![false; self.edges.len()];
        for &e in ids {
            *drop.get_mut(e).ok_or(Error::UnknownEdgeId(e))? = true;
        }
        let kept: Vec<EdgeId> = (0..self.edges.len()).filter(|&e| !drop[e]).collect();
        let g = Graph::new(self.n, kept.iter().map(|&e| self.edges[e]))?;
        Ok((g, kept))
    }

    /// Removes `v` and its incident edges; the map sends new labels to old ones.
    pub fn delete_vertex(&self, v: Vertex) -> Result<(Graph, Vec<Vertex>)> {
        self.check_vertex(v)?;
        let keep = VertexSet::new(self.vertices().filter(|&u| u != v), self.n)?;
        self.induced_subgraph(&keep)
    }

    /// Spanning subgraph on the listed edge ids, which keep their relative order.
    pub fn edge_subgraph(&self, ids: &[EdgeId]) -> Result<Graph> {
        let edges: Result<Vec<_>> = ids.iter().map(|&e| self.endpoints(e)).collect();
        Graph::new(self.n, edges?)
    }

    /// Short stable digest of the labeled edge list.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!("{} {}", self.n, self.edges.len()).as_bytes());
        for &(u, v) in &self.edges {
            hasher.update(format!(";{u}-{v}").as_bytes());
        }
        hasher
            .finalize()
            .iter()
            .take(8)
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    /// Sorted, deduplicated edge pairs; equal for graphs that agree as
    /// labeled simple graphs.
    pub fn simple_edge_set(&self) -> Vec<(Vertex, Vertex)> {
        let mut pairs = self.edges.clone();
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Sorted, duplicate-free set of vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    /// Collects `members`, rejecting any label `>= n`.
    pub fn new<I: IntoIterator<Item = Vertex>>(members: I, n: usize) -> Result<Self> {
        let mut v: Vec<_> = members.into_iter().collect();
        if let Some(&bad) = v.iter().find(|&&x| x >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        v.sort_unstable();
        v.dedup();
        Ok(VertexSet(v))
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn build_triangle_and_digon() {
        let t = triangle();
        assert!(t.vertices().all(|v| t.degree(v).unwrap() == 2));
        assert!(t.is_simple());

        let digon = Graph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(digon.degree(0).unwrap(), 2);
        assert_eq!(digon.degree(1).unwrap(), 2);
        assert!(!digon.is_simple());
        assert_eq!(digon.edge_between(1, 0), Some(0));
    }

    #[test]
    fn build_rejects_loops_and_out_of_range() {
        assert!(matches!(
            Graph::new(1, [(0, 0)]),
            Err(Error::LoopRejected(0))
        ));
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn degree_of_star_center() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.degree(0).unwrap(), 3);
        assert!(star.degree(4).is_err());
    }

    #[test]
    fn distances() {
        let p = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            p.distances_from(0).unwrap(),
            vec![Some(0), Some(1), Some(2)]
        );
        let two = Graph::empty(2);
        assert_eq!(two.distances_from(0).unwrap(), vec![Some(0), None]);
        let c6 = cycle(6);
        let d: Vec<_> = c6
            .distances_from(0)
            .unwrap()
            .into_iter()
            .flatten()
            .collect();
        assert_eq!(d, vec![0, 1, 2, 3, 2, 1]);
    }

    #[test]
    fn deletions_and_simple() {
        assert!(triangle().is_connected());
        let (p, map) = cycle(4).delete_vertex(2).unwrap();
        assert_eq!(p.order(), 3);
        assert_eq!(p.size(), 2);
        assert_eq!(map, vec![0, 1, 3]);
        assert!(p.is_connected());
        assert!(p.vertices().all(|v| p.degree(v).unwrap() <= 2));

        let digon = Graph::new(2, [(0, 1), (0, 1)]).unwrap();
        let k2 = digon.underlying_simple();
        assert_eq!(k2.size(), 1);
        assert!(k2.is_simple());

        let (g, kept) = cycle(4).delete_edges(&[1]).unwrap();
        assert_eq!(kept, vec![0, 2, 3]);
        assert_eq!(g.size(), 3);
        assert!(matches!(
            cycle(4).delete_edges(&[9]),
            Err(Error::UnknownEdgeId(9))
        ));
    }

    #[test]
    fn vertex_set_rejects_out_of_range() {
        assert!(VertexSet::new([0, 5], 3).is_err());
        let s = VertexSet::new([2, 0, 2], 3).unwrap();
        assert_eq!(s.as_slice(), &[0, 2]);
    }
}
