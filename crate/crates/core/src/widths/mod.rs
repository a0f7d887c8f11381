//! Separators, strong/weak reachability and the width parameters they define.
//!
//! For a total order, the downward-closed sets are exactly its prefixes, so
//! separation-width of an order is the largest `|sep_r(v / S)|` over prefixes
//! `S` and vertices `v` after them.

mod degeneracy;
mod exact;
mod order;
mod sandwich;
mod treewidth;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::small::{bits, SmallGraph};
use crate::graph::{Graph, VertexSet};
use crate::radius::Radius;

pub use degeneracy::degeneracy;
pub use exact::{scol_exact, scol_exact_with, sw_exact, sw_exact_with, sw_greedy, wcol_exact, wcol_exact_with, ExactCaps};
pub use order::Ordering;
pub use sandwich::{check_sandwich, check_sandwich_with, SandwichReport, SandwichValues};
pub use treewidth::{treewidth_oracle, treewidth_oracle_with};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Param {
    Sw,
    Scol,
    Wcol,
    Degeneracy,
    Treewidth,
}

/// A width value together with the ordering that attains it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthResult {
    pub param: Param,
    pub r: Radius,
    pub value: usize,
    pub exact: bool,
    pub order: Ordering,
    /// Per-vertex reach or separator size; `value` is its maximum.
    pub profile: Vec<usize>,
}

pub(crate) const MASK_CAP: usize = 64;

pub(crate) fn small(g: &Graph) -> Result<SmallGraph> {
    if g.n() > MASK_CAP {
        return Err(Error::CapExceeded { what: "width computation vertices", got: g.n(), cap: MASK_CAP });
    }
    Ok(SmallGraph::from_graph(g))
}

/// `sep_r(v / S)`: vertices of `S` reachable from `v` by a path of length at
/// most `r` whose inner vertices avoid `S`.
pub fn sep_set(g: &Graph, v: usize, s: &VertexSet, r: Radius) -> Result<VertexSet> {
    g.check_vertex(v)?;
    g.check_set(s)?;
    if s.contains(v) {
        return Err(Error::Precondition(format!("vertex {v} lies in the separator set")));
    }
    let mut out = VertexSet::with_capacity(g.n());
    if r == Radius::Finite(0) {
        return Ok(out);
    }
    let inner = g.ball_avoiding(v, r.pred(), Some(s));
    for x in inner.iter() {
        for &u in g.neighbors(x) {
            if s.contains(u) {
                out.insert(u);
            }
        }
    }
    Ok(out)
}

/// Vertices `u <= v` reachable from `v` by a path of length at most `r`
/// whose inner vertices are all larger than `v`. Contains `v`.
pub fn sreach(g: &Graph, ord: &Ordering, v: usize, r: Radius) -> Result<VertexSet> {
    ord.check_len(g.n())?;
    g.check_vertex(v)?;
    let earlier: VertexSet = ord.as_slice()[..ord.position(v)].iter().copied().collect();
    let mut out = sep_set(g, v, &earlier, r)?;
    out.insert(v);
    Ok(out)
}

/// Vertices `u <= v` reachable from `v` by a path of length at most `r`
/// whose inner vertices are all larger than `u`. Contains `v`.
pub fn wreach(g: &Graph, ord: &Ordering, v: usize, r: Radius) -> Result<VertexSet> {
    ord.check_len(g.n())?;
    g.check_vertex(v)?;
    let mut out = VertexSet::with_capacity(g.n());
    for i in 0..=ord.position(v) {
        let u = ord.vertex_at(i);
        let before: VertexSet = ord.as_slice()[..i].iter().copied().collect();
        if g.ball_avoiding(u, r, Some(&before)).contains(v) {
            out.insert(u);
        }
    }
    Ok(out)
}

fn result(param: Param, r: Radius, ord: &Ordering, profile: Vec<usize>, exact: bool) -> WidthResult {
    let value = profile.iter().copied().max().unwrap_or(0);
    WidthResult { param, r, value, exact, order: ord.clone(), profile }
}

pub(crate) fn scol_profile(g: &SmallGraph, ord: &Ordering, r: Radius) -> Vec<usize> {
    let mut profile = vec![0; g.n];
    for i in 0..g.n {
        let v = ord.vertex_at(i);
        profile[v] = 1 + g.sep(v, ord.prefix_mask(i), r).count_ones() as usize;
    }
    profile
}

pub(crate) fn wcol_profile(g: &SmallGraph, ord: &Ordering, r: Radius) -> Vec<usize> {
    let mut profile = vec![0; g.n];
    for i in 0..g.n {
        let u = ord.vertex_at(i);
        let reach = g.ball(u, r, !ord.prefix_mask(i));
        for v in bits(reach) {
            profile[v] += 1;
        }
    }
    profile
}

/// Largest separator into each prefix: `f(S) = max_{v ∉ S} |sep_r(v / S)|`.
pub(crate) fn prefix_separator(g: &SmallGraph, s: u64, r: Radius) -> usize {
    bits(g.full() & !s).map(|v| g.sep(v, s, r).count_ones() as usize).max().unwrap_or(0)
}

pub(crate) fn sw_profile(g: &SmallGraph, ord: &Ordering, r: Radius) -> Vec<usize> {
    let mut profile = vec![0; g.n];
    for i in 0..g.n {
        let s = ord.prefix_mask(i);
        for v in bits(g.full() & !s) {
            let size = g.sep(v, s, r).count_ones() as usize;
            profile[v] = profile[v].max(size);
        }
    }
    profile
}

/// `max_v |sreach_r(v)|` for the given order.
pub fn scol_of_order(g: &Graph, ord: &Ordering, r: Radius) -> Result<WidthResult> {
    ord.check_len(g.n())?;
    let sg = small(g)?;
    Ok(result(Param::Scol, r, ord, scol_profile(&sg, ord, r), false))
}

/// `max_v |wreach_r(v)|` for the given order.
pub fn wcol_of_order(g: &Graph, ord: &Ordering, r: Radius) -> Result<WidthResult> {
    ord.check_len(g.n())?;
    let sg = small(g)?;
    Ok(result(Param::Wcol, r, ord, wcol_profile(&sg, ord, r), false))
}

/// Largest `|sep_r(v / S)|` over prefixes `S` of the order and `v ∉ S`; the
/// profile records, per vertex, the largest separator it produces.
pub fn sw_of_order(g: &Graph, ord: &Ordering, r: Radius) -> Result<WidthResult> {
    ord.check_len(g.n())?;
    let sg = small(g)?;
    Ok(result(Param::Sw, r, ord, sw_profile(&sg, ord, r), false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn sep_examples() {
        let p = generate::path(5);
        let r2 = Radius::Finite(2);
        assert_eq!(sep_set(&p, 2, &VertexSet::from([0]), r2).unwrap().to_vec(), vec![0]);
        assert_eq!(sep_set(&p, 4, &VertexSet::from([0, 2]), Radius::Finite(3)).unwrap().to_vec(), vec![2]);
        assert!(sep_set(&p, 4, &VertexSet::new(), r2).unwrap().is_empty());
        assert!(sep_set(&p, 2, &VertexSet::from([2]), r2).is_err());
        assert!(sep_set(&p, 0, &VertexSet::from([4]), Radius::Finite(3)).unwrap().is_empty());
        assert_eq!(sep_set(&p, 0, &VertexSet::from([4]), Radius::Infinite).unwrap().to_vec(), vec![4]);
    }

    #[test]
    fn reach_examples() {
        let p = generate::path(3);
        let ord = Ordering::identity(3);
        let r2 = Radius::Finite(2);
        assert_eq!(sreach(&p, &ord, 2, Radius::Finite(0)).unwrap().to_vec(), vec![2]);
        assert_eq!(sreach(&p, &ord, 2, r2).unwrap().to_vec(), vec![1, 2]);
        assert_eq!(wreach(&p, &ord, 2, r2).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(sreach(&p, &ord, 0, r2).unwrap().to_vec(), vec![0]);
        assert_eq!(wreach(&p, &ord, 0, r2).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn mask_profiles_match_set_versions() {
        for seed in 0..20 {
            let g = generate::gnp(8, 0.35, seed);
            let ord = Ordering::new(vec![3, 1, 7, 0, 5, 2, 6, 4]).unwrap();
            for r in [Radius::Finite(1), Radius::Finite(2), Radius::Infinite] {
                let scol = scol_of_order(&g, &ord, r).unwrap();
                let wcol = wcol_of_order(&g, &ord, r).unwrap();
                for v in 0..8 {
                    assert_eq!(scol.profile[v], sreach(&g, &ord, v, r).unwrap().len());
                    assert_eq!(wcol.profile[v], wreach(&g, &ord, v, r).unwrap().len());
                }
            }
        }
    }

    #[test]
    fn sw_of_order_examples() {
        for r in [Radius::Finite(1), Radius::Finite(2), Radius::Finite(5), Radius::Infinite] {
            assert_eq!(sw_of_order(&generate::path(7), &Ordering::identity(7), r).unwrap().value, 1);
            assert_eq!(sw_of_order(&generate::complete(5), &Ordering::new(vec![4, 2, 0, 1, 3]).unwrap(), r).unwrap().value, 4);
        }
        // BFS from the root: every prefix is a subtree containing the root, and
        // a later vertex only sees the attachment point of its own branch
        let tree = Graph::new(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        let bfs = Ordering::identity(7);
        assert_eq!(sw_of_order(&tree, &bfs, Radius::Infinite).unwrap().value, 1);
        // leaves first is worse: once all four leaves are placed, the root
        // reaches every one of them through its children
        assert_eq!(sw_of_order(&tree, &bfs.reversed(), Radius::Infinite).unwrap().value, 4);
    }
}
