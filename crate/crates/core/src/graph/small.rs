//! Bitmask adjacency for the exhaustive solvers (`n <= 64`).

use crate::graph::{Graph, VertexSet};
use crate::radius::Radius;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct SmallGraph {
    pub n: usize,
    pub nbr: Vec<u64>,
}

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(x)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn set_of(mask: u64) -> VertexSet {
    bits(mask).collect()
}

impl SmallGraph {
    pub fn from_graph(g: &Graph) -> SmallGraph {
        assert!(g.n() <= 64, "bitmask solvers need n <= 64");
        let nbr = g.vertices().map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u)).collect();
        SmallGraph { n: g.n(), nbr }
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> =
            (0..self.n).flat_map(|u| bits(self.nbr[u]).filter(move |&v| u < v).map(move |v| (u, v))).collect();
        Graph::new(self.n, edges).unwrap()
    }

    pub fn full(&self) -> u64 {
        full_mask(self.n)
    }

    /// Vertices within distance `r` of `v` using only vertices in `allowed`
    /// (`v` itself must be allowed).
    pub fn ball(&self, v: usize, r: Radius, allowed: u64) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        let mut depth = 0;
        while frontier != 0 && r.admits(depth + 1) {
            depth += 1;
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.nbr[u];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// `sep_r(v / S)` for `v ∉ S`: members of `S` reachable by a path of
    /// length at most `r` whose inner vertices avoid `S`.
    pub fn sep(&self, v: usize, s: u64, r: Radius) -> u64 {
        if r == Radius::Finite(0) {
            return 0;
        }
        let inner = self.ball(v, r.pred(), !s);
        let mut out = 0;
        for u in bits(inner) {
            out |= self.nbr[u];
        }
        out & s
    }

    /// The graph induced on `keep`, renumbered ascending.
    pub fn induced(&self, keep: u64) -> SmallGraph {
        let order: Vec<usize> = bits(keep).collect();
        let mut index = [usize::MAX; 64];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let nbr = order
            .iter()
            .map(|&v| bits(self.nbr[v] & keep).fold(0u64, |m, u| m | 1 << index[u]))
            .collect();
        SmallGraph { n: order.len(), nbr }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.nbr[u] >> v & 1 == 1
    }
}
