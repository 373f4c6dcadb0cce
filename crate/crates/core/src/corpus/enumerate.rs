//! Isomorphism-free enumeration of small simple graphs.
//!
//! Canonical labelings come from a plain individualization-refinement
//! search: refine the ordered partition by neighbor counts until equitable,
//! branch on each vertex of the first non-singleton cell, and keep the leaf
//! whose relabeled adjacency matrix is largest. No automorphism pruning, so
//! the cost grows with symmetry; at the sizes used here that is harmless.

use std::collections::HashSet;

use rand::Rng;

use crate::decomposition::{is_dt_graph, is_two_connected};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order the enumerators accept.
pub const MAX_ENUMERATION_ORDER: usize = 12;

type Rows = Vec<u64>;

fn rows(g: &Graph) -> Rows {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn refine(rows: &Rows, mut cells: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, Vertex)> = cell
                .iter()
                .map(|&v| {
                    (
                        masks.iter().map(|m| (rows[v] & m).count_ones()).collect(),
                        v,
                    )
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// Adjacency rows of the graph relabeled by `order` (new label = position).
fn code(rows: &Rows, order: &[Vertex]) -> Rows {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut r = 0u64;
            let mut m = rows[v];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                r |= 1 << pos[w];
                m &= m - 1;
            }
            r
        })
        .collect()
}

fn search(rows: &Rows, cells: Vec<Vec<Vertex>>, best: &mut Option<(Rows, Vec<Vertex>)>) {
    let cells = refine(rows, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<Vertex> = cells.into_iter().map(|c| c[0]).collect();
        let c = code(rows, &order);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            *best = Some((c, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = cells.clone();
        let rest: Vec<Vertex> = cells[target].iter().copied().filter(|&u| u != v).collect();
        next[target] = vec![v];
        next.insert(target + 1, rest);
        search(rows, next, best);
    }
}

/// Canonical relabeling of a simple graph: `order[i]` is the old label of the
/// vertex that gets label `i`. Isomorphic graphs relabel to identical graphs.
pub fn canonical_order(g: &Graph) -> Vec<Vertex> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let r = rows(g);
    let mut best = None;
    search(&r, vec![(0..n).collect()], &mut best);
    best.expect("at least one leaf").1
}

/// `g` relabeled canonically, edges in lexicographic order. Parallel edges
/// are collapsed.
pub fn canonical_form(g: &Graph) -> Graph {
    let order = canonical_order(g);
    let mut pos = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges: Vec<_> = g
        .simple_edge_set()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (pos[u], pos[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    Graph::new(g.order(), edges).expect("relabeling keeps edges valid")
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(())
}

/// Deduplicates by canonical form; output sorted by (size, edge list).
fn dedup(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out: Vec<Graph> = graphs
        .into_iter()
        .map(|g| canonical_form(&g))
        .filter(|g| seen.insert(g.clone()))
        .collect();
    out.sort_by(|a, b| (a.size(), a.edges()).cmp(&(b.size(), b.edges())));
    out
}

fn extend_by_vertex(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let n = g.order();
    (0u64..1 << n).map(move |mask| {
        let extra = (0..n)
            .filter(move |&v| mask >> v & 1 == 1)
            .map(move |v| (v, n));
        Graph::new(n + 1, g.edges().iter().copied().chain(extra)).expect("valid extension")
    })
}

/// One representative per isomorphism class of simple graphs on `n`
/// vertices, canonically labeled.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    check_order(n)?;
    let mut level = vec![Graph::empty(0)];
    for _ in 0..n {
        level = dedup(level.iter().flat_map(extend_by_vertex).collect::<Vec<_>>());
    }
    Ok(level)
}

/// All classes of `all_graphs(k)` for `k` in `lo..=hi`, in order of `k`.
pub fn all_graphs_range(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    check_order(hi)?;
    let mut out = Vec::new();
    let mut level = vec![Graph::empty(0)];
    for k in 0..=hi {
        if k > 0 {
            level = dedup(level.iter().flat_map(extend_by_vertex).collect::<Vec<_>>());
        }
        if k >= lo {
            out.extend(level.iter().cloned());
        }
    }
    Ok(out)
}

/// Unlabeled trees on `n >= 1` vertices.
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    check_order(n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        let grown: Vec<Graph> = level
            .iter()
            .flat_map(|t| {
                (0..k).map(move |v| {
                    Graph::new(k + 1, t.edges().iter().copied().chain([(v, k)]))
                        .expect("valid leaf")
                })
            })
            .collect();
        level = dedup(grown);
    }
    Ok(level)
}

/// Loopless multigraphs on `b` vertices with `m` edges and minimum degree at
/// least 3, as edge lists (pairs chosen as a multiset, nondecreasing).
fn cores(b: usize, m: usize) -> Vec<Vec<(Vertex, Vertex)>> {
    let pairs: Vec<(Vertex, Vertex)> = (0..b)
        .flat_map(|i| (i + 1..b).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        pairs: &[(Vertex, Vertex)],
        from: usize,
        left: usize,
        b: usize,
        cur: &mut Vec<(Vertex, Vertex)>,
        out: &mut Vec<Vec<(Vertex, Vertex)>>,
    ) {
        if left == 0 {
            let mut deg = vec![0; b];
            for &(u, v) in cur.iter() {
                deg[u] += 1;
                deg[v] += 1;
            }
            if deg.iter().all(|&d| d >= 3) {
                out.push(cur.clone());
            }
            return;
        }
        for i in from..pairs.len() {
            cur.push(pairs[i]);
            rec(pairs, i, left - 1, b, cur, out);
            cur.pop();
        }
    }
    rec(&pairs, 0, m, b, &mut cur, &mut out);
    out
}

/// Compositions of `total` into `parts` positive integers.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// 2-connected simple DT-graphs on exactly `n` vertices, one per class.
///
/// Besides `C_n`, such a graph is a subdivision of a loopless multigraph
/// with minimum degree 3 in which every edge gets at least one new vertex;
/// the candidates are built that way and then filtered.
pub fn dt_blocks(n: usize) -> Result<Vec<Graph>> {
    check_order(n)?;
    let mut cands = Vec::new();
    if n >= 3 {
        cands.push(crate::corpus::generators::cycle(n));
    }
    for b in 2..=n {
        let min_m = (3 * b).div_ceil(2);
        if b + min_m > n {
            break;
        }
        for m in min_m..=n - b {
            for core in cores(b, m) {
                for split in compositions(n - b, m) {
                    let mut next = b;
                    let mut edges = Vec::new();
                    for (&(u, v), &k) in core.iter().zip(&split) {
                        let mut prev = u;
                        for _ in 0..k {
                            edges.push((prev, next));
                            prev = next;
                            next += 1;
                        }
                        edges.push((prev, v));
                    }
                    let g = Graph::new(n, edges).expect("valid subdivision");
                    if g.is_simple() && is_two_connected(&g) && is_dt_graph(&g) {
                        cands.push(g);
                    }
                }
            }
        }
    }
    Ok(dedup(cands))
}

/// `G(n, p)`: each of the `n(n-1)/2` pairs independently with probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::new(n, edges).expect("pairs are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::generators::{complete, cycle, path, star};

    #[test]
    fn canonical_form_is_label_invariant() {
        let a = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert!(!is_isomorphic(&a, &star(3)));
        assert!(is_isomorphic(&path(4), &a));
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34]);
        let t: Vec<usize> = (1..=7).map(|n| trees(n).unwrap().len()).collect();
        assert_eq!(t, [1, 1, 1, 2, 3, 6, 11]);
    }

    #[test]
    fn dt_blocks_small() {
        // n = 5: C5 and K_{2,3}.
        let d5 = dt_blocks(5).unwrap();
        assert_eq!(d5.len(), 2);
        assert!(d5.iter().any(|g| is_isomorphic(g, &cycle(5))));
        assert_eq!(dt_blocks(4).unwrap().len(), 1);
        assert!(dt_blocks(10).unwrap().iter().any(|g| g.size() == 12 && {
            let s = crate::corpus::generators::full_subdivision(&complete(4));
            is_isomorphic(g, &s)
        }));
    }

    #[test]
    fn too_large() {
        assert!(matches!(all_graphs(13), Err(Error::TooLarge { .. })));
    }
}
