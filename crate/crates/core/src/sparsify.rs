//! The deletion set that approximates every flip of a fixed partition in a
//! `K_{t,t}`-free graph.
//!
//! A block is *t-small* when it has fewer than `t²` vertices and *t-big*
//! otherwise; a vertex is *t-complete* to a block when it misses fewer than
//! `t` of the block's vertices. The deletion set collects every vertex of a
//! t-small block and every vertex t-complete to some t-big block. After
//! deleting it, every remaining edge has its endpoints within distance 3 in
//! any flip over the partition, so distances shrink by at most a factor of 3.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{apply_pflip, require_ktt_free, FlipSpec, Graph, Partition, VertexSet};
use crate::radius::Radius;

pub fn is_t_small(block_len: usize, t: usize) -> bool {
    block_len < t * t
}

/// `|block \ N(v)| < t`.
///
/// When `v` lies in `block` it counts as one of its own non-neighbours.
pub fn is_t_complete(g: &Graph, v: usize, block: &[usize], t: usize) -> bool {
    block.iter().filter(|&&u| !g.has_edge(v, u)).count() < t
}

/// Every vertex of `g` that is t-complete to `block`.
pub fn complete_vertices(g: &Graph, block: &[usize], t: usize) -> VertexSet {
    g.vertices().filter(|&v| is_t_complete(g, v, block, t)).collect()
}

/// Why a vertex was put into the deletion set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "block", rename_all = "kebab-case")]
pub enum Reason {
    InSmallPart(usize),
    CompleteToBigPart(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsifyReport {
    pub deleted: VertexSet,
    pub reasons: BTreeMap<usize, Reason>,
    /// `|P| * t²`; the deletion set is strictly smaller on `K_{t,t}`-free input.
    pub bound: usize,
    pub passed: bool,
}

impl SparsifyReport {
    /// Re-checks every reason tag against the definition.
    pub fn reasons_valid(&self, g: &Graph, p: &Partition, t: usize) -> bool {
        self.deleted.iter().all(|v| match self.reasons.get(&v) {
            Some(Reason::InSmallPart(b)) => *b == p.block_of(v) && is_t_small(p.block(*b).len(), t),
            Some(Reason::CompleteToBigPart(b)) => {
                *b < p.len() && !is_t_small(p.block(*b).len(), t) && is_t_complete(g, v, p.block(*b), t)
            }
            None => false,
        }) && self.reasons.len() == self.deleted.len()
    }
}

/// The deletion set for `(g, p, t)` with a reason per deleted vertex.
/// A vertex in a t-small block is tagged with that block even if it is also
/// t-complete to some t-big block.
pub fn sparsify_set(g: &Graph, p: &Partition, t: usize) -> Result<SparsifyReport> {
    if p.n() != g.n() {
        return Err(Error::InvalidPartition(format!("partition covers {} vertices, graph has {}", p.n(), g.n())));
    }
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    let mut reasons = BTreeMap::new();
    for (b, block) in p.blocks().iter().enumerate() {
        if is_t_small(block.len(), t) {
            for &v in block {
                reasons.insert(v, Reason::InSmallPart(b));
            }
        }
    }
    for (b, block) in p.blocks().iter().enumerate() {
        if !is_t_small(block.len(), t) {
            for v in complete_vertices(g, block, t).iter() {
                reasons.entry(v).or_insert(Reason::CompleteToBigPart(b));
            }
        }
    }
    let deleted: VertexSet = reasons.keys().copied().collect();
    let bound = p.len() * t * t;
    let passed = deleted.len() < bound || g.n() == 0;
    Ok(SparsifyReport { deleted, reasons, bound, passed })
}

/// The first pair found violating one of the engine guarantees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EngineViolation {
    /// An edge of `G \ S` whose endpoints are more than 3 apart in the flip.
    EdgeStretched { u: usize, v: usize, flipped_distance: Radius },
    /// `dist_H(u, v) > 3 dist_{G\S}(u, v)`.
    DistanceRatio { u: usize, v: usize, remaining: usize, flipped: Radius },
    /// `|S| >= |P| t²`.
    TooLarge { size: usize, bound: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineReport {
    pub deleted: VertexSet,
    pub bound: usize,
    pub violation: Option<EngineViolation>,
}

impl EngineReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks the distance guarantees for a given deletion set `s` against the
/// flipped graph `h`: edges of `G \ S` stay within distance 3 in `h`, and
/// `dist_H <= 3 dist_{G\S}` for every pair outside `s`.
pub fn engine_violation(g: &Graph, h: &Graph, s: &VertexSet) -> Option<EngineViolation> {
    let outside: Vec<usize> = g.vertices().filter(|&v| !s.contains(v)).collect();
    let flipped: Vec<Vec<Option<usize>>> = g.vertices().map(|v| h.distances(v)).collect();
    let to_radius = |d: Option<usize>| d.map_or(Radius::Infinite, Radius::Finite);
    for (u, v) in g.edges() {
        if s.contains(u) || s.contains(v) {
            continue;
        }
        let d = to_radius(flipped[u][v]);
        if d > Radius::Finite(3) {
            return Some(EngineViolation::EdgeStretched { u, v, flipped_distance: d });
        }
    }
    for &u in &outside {
        let remaining = g.distances_avoiding(u, Some(s));
        for &v in &outside {
            if let Some(dr) = remaining[v] {
                let dh = to_radius(flipped[u][v]);
                if dh > Radius::Finite(3 * dr) {
                    return Some(EngineViolation::DistanceRatio { u, v, remaining: dr, flipped: dh });
                }
            }
        }
    }
    None
}

/// Verifies the engine guarantees for the `P`-flip `f` of a `K_{t,t}`-free graph.
pub fn verify_engine(g: &Graph, p: &Partition, t: usize, f: &FlipSpec) -> Result<EngineReport> {
    require_ktt_free(g, t)?;
    let report = sparsify_set(g, p, t)?;
    let h = apply_pflip(g, p, f)?;
    let violation = if report.deleted.len() >= report.bound && g.n() > 0 {
        Some(EngineViolation::TooLarge { size: report.deleted.len(), bound: report.bound })
    } else {
        engine_violation(g, &h, &report.deleted)
    };
    Ok(EngineReport { deleted: report.deleted, bound: report.bound, violation })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinementDelta {
    pub delta: VertexSet,
    /// `2t²`
    pub bound: usize,
    pub holds: bool,
}

/// `Sparsify(G, P') \ Sparsify(G, P)` for a refinement `P'` with one more block.
pub fn refinement_delta(g: &Graph, p: &Partition, refined: &Partition, t: usize) -> Result<RefinementDelta> {
    if !refined.refines(p) || refined.len() != p.len() + 1 {
        return Err(Error::Precondition(format!(
            "expected a refinement with exactly one more block ({} -> {} blocks)",
            p.len(),
            refined.len()
        )));
    }
    require_ktt_free(g, t)?;
    let before = sparsify_set(g, p, t)?.deleted;
    let after = sparsify_set(g, refined, t)?.deleted;
    let delta = after.difference(&before);
    let bound = 2 * t * t;
    let holds = delta.len() < bound;
    Ok(RefinementDelta { delta, bound, holds })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairVerdict {
    Separated,
    NotSeparated,
    /// An endpoint was deleted.
    InsideDeleted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionWitness {
    pub deleted: VertexSet,
    pub verdicts: Vec<((usize, usize), PairVerdict)>,
}

impl DeletionWitness {
    pub fn all_separated(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| *v != PairVerdict::NotSeparated)
    }
}

/// Turns a flip that puts every listed pair more than `3r` apart into a
/// deletion set (at most `|P| t²` vertices) after which every pair outside
/// it is more than `r` apart in `G`.
pub fn deletion_witness_from_flip(
    g: &Graph,
    t: usize,
    p: &Partition,
    f: &FlipSpec,
    pairs: &[(usize, usize)],
    r: Radius,
) -> Result<DeletionWitness> {
    require_ktt_free(g, t)?;
    let h = apply_pflip(g, p, f)?;
    let far = r.scale(3);
    for &(u, v) in pairs {
        let d = h.distance(u, v)?;
        if d <= far {
            return Err(Error::Precondition(format!(
                "pair ({u}, {v}) is at distance {d} in the flipped graph, need more than {far}"
            )));
        }
    }
    let deleted = sparsify_set(g, p, t)?.deleted;
    let verdicts = pairs
        .iter()
        .map(|&(u, v)| {
            let verdict = if deleted.contains(u) || deleted.contains(v) {
                PairVerdict::InsideDeleted
            } else {
                let d = g.distances_avoiding(u, Some(&deleted))[v].map_or(Radius::Infinite, Radius::Finite);
                if d > r {
                    PairVerdict::Separated
                } else {
                    PairVerdict::NotSeparated
                }
            };
            ((u, v), verdict)
        })
        .collect();
    Ok(DeletionWitness { deleted, verdicts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_pflips, generate};

    #[test]
    fn smallness_threshold() {
        assert!(is_t_small(3, 2));
        assert!(!is_t_small(4, 2));
        assert!(!is_t_small(1, 1));
    }

    #[test]
    fn completeness_examples() {
        let star = generate::star(5);
        assert!(is_t_complete(&star, 0, &[1, 2, 3, 4], 2));
        let g = Graph::empty(4);
        assert!(!is_t_complete(&g, 0, &[1, 2, 3], 2));
        // v inside the block, adjacent to all others: only v itself is missed
        assert!(is_t_complete(&star, 0, &[0, 1, 2], 2));
        assert!(!is_t_complete(&star, 0, &[0, 1, 2], 1));
    }

    #[test]
    fn sparsify_examples() {
        let star = generate::star(6);
        let p = Partition::new(6, vec![vec![0], vec![1, 2, 3, 4, 5]]).unwrap();
        let rep = sparsify_set(&star, &p, 2).unwrap();
        assert_eq!(rep.deleted.to_vec(), vec![0]);
        assert_eq!(rep.reasons[&0], Reason::InSmallPart(0));
        assert!(rep.reasons_valid(&star, &p, 2));

        let c5 = generate::cycle(5);
        let rep = sparsify_set(&c5, &Partition::whole(5), 2).unwrap();
        assert!(rep.deleted.is_empty());

        let rep = sparsify_set(&c5, &Partition::singletons(5), 2).unwrap();
        assert_eq!(rep.deleted, VertexSet::full(5));
    }

    #[test]
    fn complete_vertices_examples() {
        assert!(complete_vertices(&Graph::empty(5), &[0, 1, 2], 2).is_empty());
        let k5 = generate::complete(5);
        assert_eq!(complete_vertices(&k5, &[0, 1, 2, 3, 4], 2).len(), 5);
    }

    #[test]
    fn engine_identity_flip() {
        let g = generate::random_ktt_free(12, 0.4, 2, 3);
        let p = Partition::new(12, vec![(0..6).collect(), (6..12).collect()]).unwrap();
        let rep = verify_engine(&g, &p, 2, &FlipSpec::new()).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn engine_all_flips_two_blocks() {
        for seed in 0..10 {
            let g = generate::random_ktt_free(11, 0.5, 2, seed);
            let p = Partition::new(11, vec![(0..5).collect(), (5..11).collect()]).unwrap();
            for f in enumerate_pflips(&p).unwrap() {
                assert!(verify_engine(&g, &p, 2, &f).unwrap().passed(), "seed {seed} flip {f:?}");
            }
        }
    }

    #[test]
    fn engine_rejects_bicliques() {
        let k22 = generate::complete_bipartite(2, 2);
        let err = verify_engine(&k22, &Partition::whole(4), 2, &FlipSpec::new()).unwrap_err();
        assert!(matches!(err, Error::NotKttFree { .. }));
    }

    #[test]
    fn mutated_set_is_caught() {
        // flipping {0} against the rest detaches 1 from 0 and leaves it isolated
        let g = Graph::new(5, [(0, 1)]).unwrap();
        let p = Partition::new(5, vec![vec![0], vec![1, 2, 3, 4]]).unwrap();
        let f = FlipSpec::from(vec![(0, 1)]);
        let h = apply_pflip(&g, &p, &f).unwrap();
        let s = sparsify_set(&g, &p, 2).unwrap().deleted;
        assert_eq!(s.to_vec(), vec![0]);
        assert!(engine_violation(&g, &h, &s).is_none());
        let violation = engine_violation(&g, &h, &VertexSet::new()).unwrap();
        assert!(matches!(violation, EngineViolation::EdgeStretched { u: 0, v: 1, .. }));
    }

    #[test]
    fn refinement_delta_cases() {
        let g = generate::random_ktt_free(10, 0.4, 2, 11);
        let p = Partition::new(10, vec![vec![0, 1, 2], (3..10).collect()]).unwrap();
        assert!(refinement_delta(&g, &p, &p, 2).is_err());
        let refined = p.split(0, &VertexSet::from([0])).unwrap();
        let d = refinement_delta(&g, &p, &refined, 2).unwrap();
        // the split block was already t-small, so nothing new can appear
        assert!(d.delta.is_subset(&VertexSet::from([0, 1, 2])));
        assert!(d.holds);
    }

    #[test]
    fn deletion_witness_cases() {
        // two triangles joined by an edge, flipped apart
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let p = Partition::new(6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let f = FlipSpec::new();
        let w = deletion_witness_from_flip(&g, 2, &p, &f, &[], Radius::Finite(2)).unwrap();
        assert!(w.all_separated());

        // 0 and 5 are at distance 3 in G: not more than 3r for r = 1
        assert!(deletion_witness_from_flip(&g, 2, &p, &f, &[(0, 5)], Radius::Finite(1)).is_err());

        let two = Graph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let w = deletion_witness_from_flip(&two, 2, &Partition::whole(6), &f, &[(0, 5), (1, 4)], Radius::Finite(1))
            .unwrap();
        assert!(w.all_separated());
        assert!(w.verdicts.iter().all(|(_, v)| *v == PairVerdict::Separated));

        // r = 0 only requires distinct endpoints outside the deleted set
        let w = deletion_witness_from_flip(&g, 2, &p, &f, &[(0, 1)], Radius::Finite(0)).unwrap();
        assert!(w.all_separated());
    }
}
