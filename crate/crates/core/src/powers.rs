//! Squares and higher powers of graphs.
//!
//! `square` joins every pair of vertices with a common neighbor; it is the
//! production path. `square_by_distance` builds the same graph from BFS
//! distances and is kept as an independent cross-check. All powers are simple
//! graphs on the vertex set of the input, with edges listed in ascending
//! lexicographic order.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// `G²` by scanning neighbors and neighbors of neighbors.
pub fn square(g: &Graph) -> Graph {
    let n = g.order();
    let nbrs: Vec<Vec<Vertex>> = g.vertices().map(|v| g.neighbors(v)).collect();
    let mut mark = vec![usize::MAX; n];
    let mut edges = Vec::new();
    for x in 0..n {
        mark[x] = x;
        let mut reach = Vec::new();
        for &u in &nbrs[x] {
            if mark[u] != x {
                mark[u] = x;
                reach.push(u);
            }
            for &w in &nbrs[u] {
                if mark[w] != x {
                    mark[w] = x;
                    reach.push(w);
                }
            }
        }
        reach.retain(|&y| y > x);
        reach.sort_unstable();
        edges.extend(reach.into_iter().map(|y| (x, y)));
    }
    Graph::new(n, edges).expect("square of a valid graph")
}

/// `G²` from the distance table: `xy` is an edge iff `0 < d(x, y) <= 2`.
pub fn square_by_distance(g: &Graph) -> Graph {
    by_distance(g, 2)
}

/// `G^k`: `xy` is an edge iff `0 < d(x, y) <= k`.
pub fn power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    Ok(by_distance(g, k))
}

fn by_distance(g: &Graph, k: usize) -> Graph {
    let n = g.order();
    let mut edges = Vec::new();
    for x in 0..n {
        let dist = g.distances_from(x).expect("vertex in range");
        edges.extend(
            (x + 1..n)
                .filter(|&y| matches!(dist[y], Some(d) if d <= k))
                .map(|y| (x, y)),
        );
    }
    Graph::new(n, edges).expect("power of a valid graph")
}

/// Largest finite distance, or `None` when the graph is disconnected or empty.
pub fn diameter(g: &Graph) -> Option<usize> {
    if g.order() == 0 || !g.is_connected() {
        return None;
    }
    g.vertices()
        .map(|v| {
            g.distances_from(v)
                .expect("vertex in range")
                .into_iter()
                .flatten()
                .max()
                .unwrap_or(0)
        })
        .max()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn c5_square_is_k5() {
        let sq = square(&cycle(5));
        assert_eq!(sq.size(), 10);
    }

    #[test]
    fn k2_square_is_k2() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(square(&k2), k2);
    }

    #[test]
    fn p4_cube_is_k4() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(power(&p4, 3).unwrap().size(), 6);
        assert!(matches!(power(&p4, 0), Err(Error::InvalidK)));
    }

    #[test]
    fn c6_square_has_twelve_edges() {
        // Each vertex of C6 sees 2 vertices at distance 1 and 2 at distance 2.
        assert_eq!(power(&cycle(6), 2).unwrap().size(), 12);
    }

    #[test]
    fn square_of_multigraph_ignores_multiplicity() {
        let g = Graph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        let sq = square(&g);
        assert!(sq.is_simple());
        assert_eq!(sq.size(), 3);
        assert_eq!(sq, square_by_distance(&g));
    }

    #[test]
    fn disconnected_square_has_no_cross_edges() {
        let g = Graph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let sq = square(&g);
        assert_eq!(
            sq.simple_edge_set(),
            vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
        );
    }
}
