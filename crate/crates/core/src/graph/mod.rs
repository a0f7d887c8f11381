//! Labeled simple graphs on `{0, .., n-1}` and the operations every other
//! module builds on: flips, balls and distances, deletion and isolation,
//! biclique detection, I/O and seeded generators.

mod biclique;
mod flip;
pub mod generate;
pub mod io;
mod partition;
mod set;
pub(crate) mod small;

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::radius::Radius;

pub use biclique::{find_biclique, find_biclique_with, is_ktt_free, Biclique, BicliqueCaps};
pub(crate) use biclique::require_ktt_free;
pub use flip::{apply_pflip, enumerate_pflips, enumerate_pflips_with, flip_pair, isolation_as_flips};
pub use partition::{FlipSpec, Partition};
pub use set::VertexSet;

/// An immutable simple undirected graph.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
    m: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops and out-of-range endpoints.
    /// Duplicate edges are merged.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph::from_rows(rows))
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_rows(vec![FixedBitSet::with_capacity(n); n])
    }

    pub(crate) fn from_rows(rows: Vec<FixedBitSet>) -> Graph {
        let adj: Vec<Vec<usize>> = rows.iter().map(|r| r.ones().collect()).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, rows, m }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].iter().copied().collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n()) {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
            None => Ok(()),
        }
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let rows = (0..n)
            .map(|u| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert_range(..);
                row.difference_with(&self.rows[u]);
                row.set(u, false);
                row
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// The subgraph induced by `keep`, renumbered in ascending vertex order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let order = keep.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let k = order.len();
        let rows = order
            .iter()
            .map(|&v| {
                let mut row = FixedBitSet::with_capacity(k);
                for &u in &self.adj[v] {
                    if index[u] != usize::MAX {
                        row.insert(index[u]);
                    }
                }
                row
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Breadth-first distances from `src`, ignoring vertices in `avoid`.
    /// `None` marks unreachable vertices.
    pub fn distances_avoiding(&self, src: usize, avoid: Option<&VertexSet>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        if avoid.is_some_and(|a| a.contains(src)) {
            return dist;
        }
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() && !avoid.is_some_and(|a| a.contains(w)) {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances(&self, src: usize) -> Vec<Option<usize>> {
        self.distances_avoiding(src, None)
    }

    /// Shortest-path distance, `Infinite` when disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Radius> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances(u)[v].map_or(Radius::Infinite, Radius::Finite))
    }

    /// `B^r(v)`: vertices at distance at most `r`; with `r = ∞` the component of `v`.
    pub fn ball(&self, v: usize, r: Radius) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.ball_avoiding(v, r, None))
    }

    pub(crate) fn ball_avoiding(&self, v: usize, r: Radius, avoid: Option<&VertexSet>) -> VertexSet {
        let mut out = VertexSet::with_capacity(self.n());
        if avoid.is_some_and(|a| a.contains(v)) {
            return out;
        }
        out.insert(v);
        let mut frontier = vec![v];
        let mut depth = 0;
        while !frontier.is_empty() && r.admits(depth + 1) {
            depth += 1;
            let mut next = Vec::new();
            for u in frontier {
                for &w in &self.adj[u] {
                    if !out.contains(w) && !avoid.is_some_and(|a| a.contains(w)) {
                        out.insert(w);
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        out
    }

    /// Removes `s` and incident edges. The second component maps old vertex
    /// ids to new ones (`None` for deleted vertices).
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_set(s)?;
        let keep: VertexSet = self.vertices().filter(|&v| !s.contains(v)).collect();
        let mut map = vec![None; self.n()];
        for (i, v) in keep.iter().enumerate() {
            map[v] = Some(i);
        }
        Ok((self.induced(&keep), map))
    }

    /// Keeps every vertex but drops all edges incident to `s`.
    pub fn isolate_vertices(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let n = self.n();
        let rows = (0..n)
            .map(|u| {
                let mut row = FixedBitSet::with_capacity(n);
                if !s.contains(u) {
                    for &w in &self.adj[u] {
                        if !s.contains(w) {
                            row.insert(w);
                        }
                    }
                }
                row
            })
            .collect();
        Ok(Graph::from_rows(rows))
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances(0).iter().all(Option::is_some)
    }

    pub fn edge_count_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|u| b.iter().filter(|&v| self.has_edge(u, v)).count()).sum()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr { n: self.n(), edges: self.edges().collect() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::new(repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}

/// Every labeled graph on `n` vertices, `2^(n choose 2)` of them, in
/// order of the edge bitmask over lexicographically ordered pairs.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "exhaustive enumeration limited to n <= 8");
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::new(n, edges).expect("pairs are in range")
    })
}
