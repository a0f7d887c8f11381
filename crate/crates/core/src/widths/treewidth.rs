//! Treewidth by dynamic programming over vertex subsets.
//!
//! `TW(S)` is the best width of an elimination order that eliminates `S`
//! first. Eliminating `v` after `S` costs `|Q(S, v)|`, the number of vertices
//! outside `S + v` reachable from `v` through `S`.

use crate::error::{Error, Result};
use crate::graph::small::{bits, SmallGraph};
use crate::graph::Graph;
use crate::radius::Radius;

pub fn treewidth_oracle(g: &Graph) -> Result<usize> {
    treewidth_oracle_with(g, 12)
}

pub fn treewidth_oracle_with(g: &Graph, max_n: usize) -> Result<usize> {
    if g.n() > max_n || g.n() > 24 {
        return Err(Error::CapExceeded { what: "treewidth oracle vertices", got: g.n(), cap: max_n.min(24) });
    }
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let sg = SmallGraph::from_graph(g);
    let q = |s: u64, v: usize| -> usize {
        let through = sg.ball(v, Radius::Infinite, s | 1 << v);
        let mut out = 0u64;
        for u in bits(through) {
            out |= sg.nbr[u];
        }
        (out & !s & !(1u64 << v)).count_ones() as usize
    };
    let size = 1usize << n;
    let mut tw = vec![usize::MAX; size];
    tw[0] = 0;
    for s in 1..size {
        let s = s as u64;
        tw[s as usize] = bits(s).map(|v| tw[(s & !(1 << v)) as usize].max(q(s & !(1 << v), v))).min().unwrap();
    }
    Ok(tw[size - 1])
}
