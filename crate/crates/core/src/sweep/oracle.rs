//! Brute-force reference implementations, kept independent of the
//! algorithms they check.

use crate::graph::{Graph, Partition, VertexSet};

/// `sep_r(v / S)` by enumerating every simple path of length at most `r`
/// from `v`, stopping a path at its first vertex of `S`.
pub fn sep_by_paths(g: &Graph, v: usize, s: &VertexSet, r: usize) -> VertexSet {
    fn walk(g: &Graph, s: &VertexSet, r: usize, path: &mut Vec<usize>, out: &mut VertexSet) {
        let last = *path.last().unwrap();
        if path.len() > r {
            return;
        }
        for &u in g.neighbors(last) {
            if path.contains(&u) {
                continue;
            }
            if s.contains(u) {
                out.insert(u);
                continue;
            }
            path.push(u);
            walk(g, s, r, path, out);
            path.pop();
        }
    }
    let mut out = VertexSet::new();
    walk(g, s, r, &mut vec![v], &mut out);
    out
}

fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    if items.len() < size {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = subsets(&items[1..], size - 1)
        .into_iter()
        .map(|mut rest| {
            rest.insert(0, items[0]);
            rest
        })
        .collect();
    with.extend(subsets(&items[1..], size));
    with
}

/// Whether `K_{t,t}` is a subgraph: every pair of disjoint `t`-sets.
pub fn has_biclique_naive(g: &Graph, t: usize) -> bool {
    let all: Vec<usize> = g.vertices().collect();
    for a in subsets(&all, t) {
        let rest: Vec<usize> = all.iter().copied().filter(|v| !a.contains(v)).collect();
        for b in subsets(&rest, t) {
            if a.iter().all(|&x| b.iter().all(|&y| g.has_edge(x, y))) {
                return true;
            }
        }
    }
    false
}

/// Adjacency of a `P`-flip computed pair by pair.
pub fn flip_naive(g: &Graph, p: &Partition, flipped: &dyn Fn(usize, usize) -> bool) -> Graph {
    let mut edges = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) != flipped(p.block_of(u), p.block_of(v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(g.n(), edges).unwrap()
}
