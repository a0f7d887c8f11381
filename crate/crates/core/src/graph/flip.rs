use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{FlipSpec, Graph, Partition, VertexSet};

/// Complements adjacency on every pair `{u, v}`, `u != v`, with `u ∈ A, v ∈ B`
/// or `u ∈ B, v ∈ A`. Flipping `(A, A)` complements `A` internally.
pub fn flip_pair(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Graph> {
    g.check_set(a)?;
    g.check_set(b)?;
    let n = g.n();
    let mut rows: Vec<FixedBitSet> = (0..n)
        .map(|u| {
            let mut row = FixedBitSet::with_capacity(n);
            row.extend(g.neighbors(u).iter().copied());
            row
        })
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            let toggled = (a.contains(u) && b.contains(v)) || (b.contains(u) && a.contains(v));
            if toggled {
                rows[u].toggle(v);
                rows[v].toggle(u);
            }
        }
    }
    Ok(Graph::from_rows(rows))
}

/// The `P`-flip of `g` selected by `f`.
pub fn apply_pflip(g: &Graph, p: &Partition, f: &FlipSpec) -> Result<Graph> {
    if p.n() != g.n() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.n(),
            g.n()
        )));
    }
    f.check(p)?;
    let n = g.n();
    let rows = (0..n)
        .map(|u| {
            let bu = p.block_of(u);
            let mut row = FixedBitSet::with_capacity(n);
            for v in 0..n {
                if v != u && (g.has_edge(u, v) != f.contains(bu, p.block_of(v))) {
                    row.insert(v);
                }
            }
            row
        })
        .collect();
    Ok(Graph::from_rows(rows))
}

/// All `2^(k(k+1)/2)` flip specifications of a `k`-block partition, in
/// binary-counter order over the pairs `(0,0), (0,1), .., (k-1,k-1)`.
pub fn enumerate_pflips_with(p: &Partition, cap: usize) -> Result<Vec<FlipSpec>> {
    let k = p.len();
    if k > cap {
        return Err(Error::CapExceeded { what: "flip enumeration blocks", got: k, cap });
    }
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    Ok((0u64..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &pair)| pair)
                .collect()
        })
        .collect())
}

pub fn enumerate_pflips(p: &Partition) -> Result<Vec<FlipSpec>> {
    enumerate_pflips_with(p, 4)
}

/// Isolating `v` as a single partition flip over `{v}, N(v), rest`
/// (empty blocks omitted): flip the pair `({v}, N(v))`.
pub fn isolation_as_flips(g: &Graph, v: usize) -> Result<(Partition, FlipSpec)> {
    g.check_vertex(v)?;
    let nbrs: Vec<usize> = g.neighbors(v).to_vec();
    let rest: Vec<usize> = g.vertices().filter(|&u| u != v && !g.has_edge(u, v)).collect();
    let mut blocks = vec![vec![v]];
    let nbr_block = if nbrs.is_empty() {
        None
    } else {
        blocks.push(nbrs);
        Some(1)
    };
    if !rest.is_empty() {
        blocks.push(rest);
    }
    let (p, pos) = Partition::new_with_order(g.n(), blocks)?;
    let mut f = FlipSpec::new();
    if let Some(b) = nbr_block {
        f.insert(pos[0], pos[b]);
    }
    Ok((p, f))
}
