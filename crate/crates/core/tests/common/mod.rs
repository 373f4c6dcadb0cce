//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the search code; graphs are read only through their edge lists.

#![allow(dead_code)]

use std::collections::VecDeque;

use hamsq::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.order()];
    for &(u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

pub fn bfs(adj: &[Vec<usize>], s: usize, removed: Option<usize>) -> Vec<Option<usize>> {
    let mut d = vec![None; adj.len()];
    if Some(s) == removed {
        return d;
    }
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &v in &adj[u] {
            if d[v].is_none() && Some(v) != removed {
                d[v] = Some(d[u].unwrap() + 1);
                q.push_back(v);
            }
        }
    }
    d
}

/// `t[a][b]`: distinct `a, b` at distance at most 2.
pub fn square_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let adj = adjacency(g);
    (0..g.order())
        .map(|a| {
            let d = bfs(&adj, a, None);
            (0..g.order())
                .map(|b| b != a && d[b].is_some_and(|x| x <= 2))
                .collect()
        })
        .collect()
}

pub fn square_edge_set(g: &Graph) -> Vec<(usize, usize)> {
    let t = square_matrix(g);
    let n = g.order();
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| t[a][b])
        .collect()
}

/// At least three vertices, connected, and still connected after deleting
/// any one vertex. Only used on simple graphs.
pub fn two_connected_oracle(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    let adj = adjacency(g);
    let connected_without = |r: Option<usize>| {
        let s = (0..n).find(|&v| Some(v) != r).unwrap();
        let d = bfs(&adj, s, r);
        (0..n).all(|v| Some(v) == r || d[v].is_some())
    };
    connected_without(None) && (0..n).all(|r| connected_without(Some(r)))
}

/// Visits every permutation of `items` (Heap's algorithm).
fn for_each_permutation(
    items: &mut [usize],
    k: usize,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if k <= 1 {
        return f(items);
    }
    for i in 0..k {
        if for_each_permutation(items, k - 1, f) {
            return true;
        }
        let j = if k.is_multiple_of(2) { i } else { 0 };
        items.swap(j, k - 1);
    }
    false
}

/// Can each of `need` get its own step of `path` that is an edge of `g`
/// touching it?
fn assign(g: &Graph, path: &[usize], need: &[usize], used: &mut Vec<bool>) -> bool {
    let Some((&x, rest)) = need.split_first() else {
        return true;
    };
    for s in 0..path.len() - 1 {
        let (a, b) = (path[s], path[s + 1]);
        if !used[s]
            && (a == x || b == x)
            && g.edges()
                .iter()
                .any(|&(u, v)| (u, v) == (a, b) || (u, v) == (b, a))
        {
            used[s] = true;
            if assign(g, path, rest, used) {
                return true;
            }
            used[s] = false;
        }
    }
    false
}

/// `F_k` existence by trying every ordering of the vertices other than `x1`
/// and `x2`. Simple graphs only.
pub fn fk_oracle(g: &Graph, a: &[usize]) -> bool {
    let n = g.order();
    let sq = square_matrix(g);
    let mut interior: Vec<usize> = (0..n).filter(|&v| v != a[0] && v != a[1]).collect();
    let len = interior.len();
    for_each_permutation(&mut interior, len, &mut |perm| {
        let mut path = vec![a[0]];
        path.extend_from_slice(perm);
        path.push(a[1]);
        path.windows(2).all(|w| sq[w[0]][w[1]]) && assign(g, &path, &a[2..], &mut vec![false; n])
    })
}

/// Edge labels for the EPS/JEPS oracle.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Unused,
    E,
    P,
    J,
}

fn components(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let d = bfs(&adj, s, None);
        for v in 0..n {
            if d[v].is_some() {
                comp[v] = s;
            }
        }
    }
    comp
}

/// Checks one labeling against the EPS (or, with `ends`, JEPS) definition
/// and the `d_P` caps.
pub fn labeling_ok(
    g: &Graph,
    labels: &[Label],
    caps: &[(usize, usize)],
    ends: Option<(usize, usize)>,
) -> bool {
    let n = g.order();
    let of = |l: Label| -> Vec<(usize, usize)> {
        g.edges()
            .iter()
            .zip(labels)
            .filter(|(_, &x)| x == l)
            .map(|(&e, _)| e)
            .collect()
    };
    let deg = |es: &[(usize, usize)]| {
        let mut d = vec![0usize; n];
        for &(u, v) in es {
            d[u] += 1;
            d[v] += 1;
        }
        d
    };
    let (e, p, j) = (of(Label::E), of(Label::P), of(Label::J));
    if deg(&e).iter().any(|d| d % 2 == 1) {
        return false;
    }
    let dp = deg(&p);
    if dp.iter().any(|&d| d > 2) || caps.iter().any(|&(v, c)| dp[v] > c) {
        return false;
    }
    // A forest has exactly n - (number of components) edges.
    let comp = components(n, &p);
    let parts = (0..n).filter(|&v| comp[v] == v).count();
    if p.len() != n - parts {
        return false;
    }
    match ends {
        Some((a, b)) => {
            if j.is_empty() {
                return false;
            }
            let dj = deg(&j);
            if (0..n).any(|v| (dj[v] % 2 == 1) != (v == a || v == b)) {
                return false;
            }
            let comp = components(n, &j);
            let root = comp[j[0].0];
            if j.iter().any(|&(u, _)| comp[u] != root) {
                return false;
            }
        }
        None => {
            if !j.is_empty() {
                return false;
            }
        }
    }
    let s: Vec<(usize, usize)> = e.iter().chain(&p).chain(&j).copied().collect();
    if n >= 2 && deg(&s).contains(&0) {
        return false;
    }
    let comp = components(n, &s);
    (0..n).all(|v| comp[v] == comp[0])
}

/// Existence of an EPS-graph (or a JEPS-graph with odd trail ends `ends`)
/// under `caps`, by trying every labeling.
pub fn eps_oracle(g: &Graph, caps: &[(usize, usize)], ends: Option<(usize, usize)>) -> bool {
    let alphabet: &[Label] = if ends.is_some() {
        &[Label::Unused, Label::E, Label::P, Label::J]
    } else {
        &[Label::Unused, Label::E, Label::P]
    };
    let m = g.size();
    let base = alphabet.len();
    let total = base.pow(m as u32);
    let mut labels = vec![Label::Unused; m];
    (0..total).any(|mut code| {
        for l in labels.iter_mut() {
            *l = alphabet[code % base];
            code /= base;
        }
        labeling_ok(g, &labels, caps, ends)
    })
}
