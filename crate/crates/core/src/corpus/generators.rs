//! Named graph families and the subdivision constructor.

use crate::graph::{Graph, Vertex};

fn build(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
    Graph::new(n, edges).expect("generator edges are in range and loopless")
}

/// `C_n` with edge `i` joining `i` and `i + 1 mod n`. `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `P_n` on `n` vertices.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

/// Two vertices `0, 1` joined by internally disjoint paths with the given
/// numbers of edges. Two paths of length 1 give a parallel pair.
pub fn theta(a: usize, b: usize, c: usize) -> Graph {
    let mut n = 2;
    let mut edges = Vec::new();
    for len in [a, b, c] {
        assert!(len >= 1, "theta paths need at least one edge");
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, 1));
    }
    build(n, edges)
}

/// Two triangles sharing vertex 2.
pub fn bowtie() -> Graph {
    build(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
}

/// `S(G)`: edge `i = uv` becomes the path `u, n + i, v`.
pub fn full_subdivision(g: &Graph) -> Graph {
    let n = g.order();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, n + i), (n + i, v)]);
    build(n + g.size(), edges)
}

/// `S(K_{1,3})`: centre 0, branch vertices 1..=3, legs ending in 4..=6.
pub fn spider() -> Graph {
    full_subdivision(&star(3))
}

/// Every edge replaced by a path with `k` new internal vertices.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    let mut n = g.order();
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        let mut prev = u;
        for _ in 0..k {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, v));
    }
    build(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{is_dt_graph, is_two_connected};

    #[test]
    fn sizes() {
        assert_eq!((complete(5).size(), star(3).order()), (10, 4));
        assert_eq!(complete_bipartite(2, 3).size(), 6);
        let t = theta(2, 2, 3);
        assert_eq!((t.order(), t.size()), (6, 7));
        assert!(is_two_connected(&t));
        assert!(!theta(1, 1, 2).is_simple());
    }

    #[test]
    fn subdivisions() {
        let s = spider();
        assert_eq!((s.order(), s.size()), (7, 6));
        let s3 = full_subdivision(&cycle(3));
        assert_eq!((s3.order(), s3.size()), (6, 6));
        assert!(is_two_connected(&s3) && s3.vertices().all(|v| s3.degree(v).unwrap() == 2));
        let sk4 = full_subdivision(&complete(4));
        assert_eq!((sk4.order(), sk4.size()), (10, 12));
        assert!(is_dt_graph(&sk4));
        assert_eq!(subdivide(&complete(4), 2).order(), 16);
        assert_eq!(subdivide(&cycle(4), 0), cycle(4));
    }
}
