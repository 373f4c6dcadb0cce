//! Blocks, cutvertices and the block-cutvertex graph, plus the degree-based
//! structure used by the DT machinery (2-valent vertices, suspended paths).
//!
//! Blocks are computed with the Hopcroft–Tarjan edge-stack DFS. Parallel
//! edges are told apart by id, so a digon forms a cyclic block of its own
//! rather than a bridge.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    /// An isolated vertex.
    Isolated,
    /// A single edge whose removal disconnects its component.
    Bridge,
    /// A 2-connected block: a digon, a cycle or anything richer.
    Cyclic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<Vertex>,
    pub kind: BlockKind,
    pub endblock: bool,
}

impl Block {
    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_two_connected(&self) -> bool {
        self.kind == BlockKind::Cyclic
    }
}

/// The block decomposition of a graph together with `bc(G)`.
///
/// `bc` is bipartite: nodes `0..blocks.len()` are blocks, the following nodes
/// are the cutvertices in ascending order (`cut_nodes[i]` is the vertex behind
/// node `blocks.len() + i`).
#[derive(Clone, Debug)]
pub struct BlockForest {
    pub blocks: Vec<Block>,
    pub cutvertices: VertexSet,
    pub bc: Graph,
}

impl BlockForest {
    /// Blocks containing `v`.
    pub fn blocks_of(&self, v: Vertex) -> impl Iterator<Item = usize> + '_ {
        self.blocks
            .iter()
            .enumerate()
            .filter(move |(_, b)| b.contains(v))
            .map(|(i, _)| i)
    }

    /// Ids of the bridges of the host graph.
    pub fn bridges(&self) -> Vec<EdgeId> {
        let mut out: Vec<_> = self
            .blocks
            .iter()
            .filter(|b| b.kind == BlockKind::Bridge)
            .map(|b| b.edges[0])
            .collect();
        out.sort_unstable();
        out
    }

    pub fn endblocks(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| b.endblock)
    }
}

pub fn block_forest(g: &Graph) -> BlockForest {
    let n = g.order();
    let (edge_blocks, is_cut) = biconnected(g);

    let mut blocks: Vec<Block> = edge_blocks
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vertices: Vec<Vertex> = edges
                .iter()
                .flat_map(|&e| {
                    let (u, v) = g.edges()[e];
                    [u, v]
                })
                .collect();
            vertices.sort_unstable();
            vertices.dedup();
            let kind = if edges.len() == 1 {
                BlockKind::Bridge
            } else {
                BlockKind::Cyclic
            };
            Block {
                edges,
                vertices,
                kind,
                endblock: false,
            }
        })
        .collect();
    for v in g.vertices().filter(|&v| g.incident(v).is_empty()) {
        blocks.push(Block {
            edges: Vec::new(),
            vertices: vec![v],
            kind: BlockKind::Isolated,
            endblock: false,
        });
    }
    blocks.sort_by_key(|b| {
        (
            b.edges.first().copied().unwrap_or(usize::MAX),
            b.vertices[0],
        )
    });

    let cutvertices = VertexSet::new((0..n).filter(|&v| is_cut[v]), n).expect("labels in range");
    let cut_nodes = cutvertices.as_slice();
    let nb = blocks.len();
    let mut bc_edges = Vec::new();
    for (bi, block) in blocks.iter_mut().enumerate() {
        let mut cuts = 0;
        for (ci, &c) in cut_nodes.iter().enumerate() {
            if block.contains(c) {
                bc_edges.push((bi, nb + ci));
                cuts += 1;
            }
        }
        block.endblock = cuts <= 1;
    }
    let bc = Graph::new(nb + cut_nodes.len(), bc_edges).expect("bipartite bc graph");
    BlockForest {
        blocks,
        cutvertices,
        bc,
    }
}

/// Edge sets of the non-trivial blocks and the cutvertex flags.
fn biconnected(g: &Graph) -> (Vec<Vec<EdgeId>>, Vec<bool>) {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, edge used to enter it, next incidence index)
        let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent_edge, idx) = *frame;
            if let Some(&(u, e)) = g.incident(v).get(idx) {
                frame.2 += 1;
                if Some(e) == parent_edge {
                    continue;
                }
                if disc[u] == usize::MAX {
                    edge_stack.push(e);
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((u, Some(e), 0));
                } else if disc[u] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let (Some(&(p, _, _)), Some(e)) = (stack.last(), parent_edge) {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(f) = edge_stack.pop() {
                            block.push(f);
                            if f == e {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (blocks, is_cut)
}

/// Connected, at least two vertices joined by a cycle, and no cutvertex.
///
/// A digon counts as 2-connected; `K1` and `K2` do not.
pub fn is_two_connected(g: &Graph) -> bool {
    if g.order() < 2 || !g.is_connected() {
        return false;
    }
    let bf = block_forest(g);
    bf.blocks.len() == 1 && bf.blocks[0].kind == BlockKind::Cyclic
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainKind {
    Trivial,
    NonTrivial,
    NotAChain,
}

/// Classifies a connected graph by the shape of `bc(G)`.
pub fn block_chain_kind(g: &Graph) -> Result<ChainKind> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(chain_kind_of(&block_forest(g)))
}

pub(crate) fn chain_kind_of(bf: &BlockForest) -> ChainKind {
    let bc = &bf.bc;
    if bc.size() == 0 {
        ChainKind::Trivial
    } else if bc.vertices().all(|v| bc.incident(v).len() <= 2) {
        ChainKind::NonTrivial
    } else {
        ChainKind::NotAChain
    }
}

/// Vertices of degree exactly 2.
pub fn v2(g: &Graph) -> VertexSet {
    VertexSet::new(
        g.vertices().filter(|&v| g.incident(v).len() == 2),
        g.order(),
    )
    .expect("labels in range")
}

/// Every edge has an endpoint of degree 2.
pub fn is_dt_graph(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| g.incident(u).len() == 2 || g.incident(v).len() == 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuspendedPath {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl SuspendedPath {
    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (
            self.vertices[0],
            *self.vertices.last().expect("nonempty path"),
        )
    }
}

/// Maximal paths with at least one internal vertex, all internal vertices
/// 2-valent and both ends of degree other than 2.
///
/// Components that are cycles yield nothing, and a closed walk returning to
/// its starting vertex is not a path, so it is skipped too. Each path is
/// reported once, oriented from its smaller end edge id.
pub fn suspended_paths(g: &Graph) -> Vec<SuspendedPath> {
    let deg = |v: Vertex| g.incident(v).len();
    let mut out = Vec::new();
    for start in g.vertices().filter(|&v| deg(v) != 2) {
        for &(first, e0) in g.incident(start) {
            if deg(first) != 2 {
                continue;
            }
            let mut vertices = vec![start, first];
            let mut edges = vec![e0];
            let (mut cur, mut via) = (first, e0);
            while deg(cur) == 2 {
                let &(next, e) = g
                    .incident(cur)
                    .iter()
                    .find(|&&(_, e)| e != via)
                    .expect("2-valent vertex has a second edge");
                vertices.push(next);
                edges.push(e);
                cur = next;
                via = e;
            }
            if cur == start || edges[0] > *edges.last().expect("nonempty") {
                continue;
            }
            out.push(SuspendedPath { vertices, edges });
        }
    }
    out.sort_by_key(|p| p.edges[0]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    fn bowtie() -> Graph {
        g(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    }

    fn k4() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn triangle_is_one_block() {
        let bf = block_forest(&g(3, &[(0, 1), (1, 2), (2, 0)]));
        assert_eq!(bf.blocks.len(), 1);
        assert!(bf.cutvertices.is_empty());
        assert!(bf.blocks[0].endblock);
    }

    #[test]
    fn p3_has_two_bridges() {
        let bf = block_forest(&g(3, &[(0, 1), (1, 2)]));
        assert_eq!(bf.blocks.len(), 2);
        assert!(bf.blocks.iter().all(|b| b.kind == BlockKind::Bridge));
        assert_eq!(bf.cutvertices.as_slice(), &[1]);
        assert_eq!(bf.bridges(), vec![0, 1]);
    }

    #[test]
    fn bowtie_blocks() {
        let bf = block_forest(&bowtie());
        assert_eq!(bf.blocks.len(), 2);
        assert_eq!(bf.cutvertices.as_slice(), &[0]);
        assert!(bf.blocks.iter().all(|b| b.endblock && b.is_two_connected()));
        assert_eq!(bf.bc.order(), 3);
        assert_eq!(bf.bc.size(), 2);
    }

    #[test]
    fn digon_is_two_connected() {
        let digon = g(2, &[(0, 1), (0, 1)]);
        assert!(is_two_connected(&digon));
        assert!(!is_two_connected(&g(2, &[(0, 1)])));
        assert!(!is_two_connected(&Graph::empty(1)));
    }

    #[test]
    fn two_connectivity_examples() {
        assert!(is_two_connected(&g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])));
        assert!(!is_two_connected(&g(4, &[(0, 1), (1, 2), (2, 3)])));
        assert!(!is_two_connected(&bowtie()));
    }

    #[test]
    fn chain_kinds() {
        assert_eq!(
            block_chain_kind(&g(3, &[(0, 1), (1, 2), (2, 0)])).unwrap(),
            ChainKind::Trivial
        );
        assert_eq!(block_chain_kind(&bowtie()).unwrap(), ChainKind::NonTrivial);
        assert_eq!(
            block_chain_kind(&g(4, &[(0, 1), (0, 2), (0, 3)])).unwrap(),
            ChainKind::NotAChain
        );
        assert_eq!(
            block_chain_kind(&g(2, &[(0, 1)])).unwrap(),
            ChainKind::Trivial
        );
        assert!(matches!(
            block_chain_kind(&Graph::empty(2)),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn degree_two_vertices() {
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(v2(&c5).len(), 5);
        assert!(v2(&k4()).is_empty());
        assert_eq!(v2(&bowtie()).as_slice(), &[1, 2, 3, 4]);
    }

    #[test]
    fn dt_examples() {
        assert!(is_dt_graph(&g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])));
        assert!(!is_dt_graph(&k4()));
        // S(K4): branch vertices 0..4, subdivision vertices 4..10.
        let mut edges = Vec::new();
        for (i, &(u, v)) in k4().edges().iter().enumerate() {
            edges.push((u, 4 + i));
            edges.push((4 + i, v));
        }
        let sk4 = g(10, &edges);
        assert!(is_dt_graph(&sk4));
        let paths = suspended_paths(&sk4);
        assert_eq!(paths.len(), 6);
        assert!(paths.iter().all(|p| p.vertices.len() == 3));
    }

    #[test]
    fn suspended_paths_edge_cases() {
        assert!(suspended_paths(&g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])).is_empty());
        assert!(suspended_paths(&k4()).is_empty());
        // The bowtie's triangles close back on the center: no suspended path.
        assert!(suspended_paths(&bowtie()).is_empty());
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let paths = suspended_paths(&p4);
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].vertices, vec![0, 1, 2, 3]);
    }
}
