//! Flipper-rank and splitter-rank on tiny graphs.
//!
//! `rank(K_1) = 1`, and otherwise `rank(G) = 1 + min_H max_v rank(H[B_H^r(v)])`
//! where `H` ranges over the `k`-flips (flipper-rank) or the deletions of at
//! most `k` vertices (splitter-rank). A ball can cover all of `H`, so the
//! recursion may revisit graphs of the same size; values are computed as the
//! least fixpoint over each such family, and a family with no finite
//! strategy gets [`Rank::Unbounded`].

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::games::FlipCaps;
use crate::graph::small::SmallGraph;
use crate::graph::{require_ktt_free, Graph};
use crate::radius::Radius;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank {
    Finite(usize),
    Unbounded,
}

impl Rank {
    pub fn finite(self) -> Option<usize> {
        match self {
            Rank::Finite(x) => Some(x),
            Rank::Unbounded => None,
        }
    }

    fn succ(self) -> Rank {
        match self {
            Rank::Finite(x) => Rank::Finite(x + 1),
            Rank::Unbounded => Rank::Unbounded,
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(x) => write!(f, "{x}"),
            Rank::Unbounded => f.write_str("inf"),
        }
    }
}

impl Serialize for Rank {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Rank::Finite(x) => s.serialize_u64(*x as u64),
            Rank::Unbounded => s.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Flip,
    Delete,
}

/// One radius and budget, with a memo keyed by labeled edge sets.
pub struct RankQuery {
    r: Radius,
    k: usize,
    kind: Kind,
    memo: HashMap<SmallGraph, Rank>,
}

pub const SRK_MAX_N: usize = 7;

impl RankQuery {
    pub fn flipper(r: Radius, k: usize) -> RankQuery {
        RankQuery { r, k, kind: Kind::Flip, memo: HashMap::new() }
    }

    pub fn splitter(r: Radius, k: usize) -> RankQuery {
        RankQuery { r, k, kind: Kind::Delete, memo: HashMap::new() }
    }

    pub fn rank(&mut self, g: &Graph) -> Result<Rank> {
        if g.n() == 0 {
            return Err(Error::Precondition("rank is defined for nonempty graphs".into()));
        }
        match self.kind {
            Kind::Flip => FlipCaps::default().check(g.n(), self.k)?,
            Kind::Delete => {
                if g.n() > SRK_MAX_N {
                    return Err(Error::CapExceeded { what: "splitter-rank vertices", got: g.n(), cap: SRK_MAX_N });
                }
            }
        }
        Ok(self.solve(SmallGraph::from_graph(g)))
    }

    /// Graphs `H` the first player may move to.
    fn moves(&self, g: &SmallGraph) -> Vec<SmallGraph> {
        match self.kind {
            Kind::Flip => crate::games::kflips_small(g, self.k),
            Kind::Delete => (0u64..1 << g.n)
                .filter(|d| d.count_ones() as usize <= self.k)
                .map(|d| g.induced(g.full() & !d))
                .collect(),
        }
    }

    /// The graphs `H[B_H^r(v)]`, one per vertex.
    fn balls(&self, h: &SmallGraph) -> Vec<SmallGraph> {
        (0..h.n).map(|v| h.induced(h.ball(v, self.r, h.full()))).collect()
    }

    fn solve(&mut self, g: SmallGraph) -> Rank {
        if g.n == 1 {
            return Rank::Finite(1);
        }
        if let Some(&v) = self.memo.get(&g) {
            return v;
        }
        let n = g.n;
        // same-size graphs reachable through balls that cover everything
        enum Child {
            Known(Rank),
            Same(usize),
        }
        let mut family: Vec<SmallGraph> = vec![g.clone()];
        let mut index: HashMap<SmallGraph, usize> = HashMap::from([(g, 0)]);
        let mut options: Vec<Vec<Vec<Child>>> = Vec::new();
        let mut next = 0;
        while next < family.len() {
            let x = family[next].clone();
            next += 1;
            let mut opts = Vec::new();
            for h in self.moves(&x) {
                let mut children = Vec::new();
                for b in self.balls(&h) {
                    if b.n < n {
                        children.push(Child::Known(self.solve(b)));
                    } else if let Some(&v) = self.memo.get(&b) {
                        children.push(Child::Known(v));
                    } else {
                        let id = *index.entry(b.clone()).or_insert_with(|| {
                            family.push(b);
                            family.len() - 1
                        });
                        children.push(Child::Same(id));
                    }
                }
                opts.push(children);
            }
            options.push(opts);
        }

        let mut value = vec![Rank::Unbounded; family.len()];
        loop {
            let mut changed = false;
            for i in 0..family.len() {
                let best = options[i]
                    .iter()
                    .map(|children| {
                        // no vertices left: the maximum over nothing is taken as 1
                        children
                            .iter()
                            .map(|c| match *c {
                                Child::Known(v) => v,
                                Child::Same(j) => value[j],
                            })
                            .max()
                            .unwrap_or(Rank::Finite(1))
                    })
                    .min()
                    .unwrap_or(Rank::Unbounded)
                    .succ();
                if best < value[i] {
                    value[i] = best;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let answer = value[0];
        for (x, v) in family.into_iter().zip(value) {
            self.memo.insert(x, v);
        }
        answer
    }
}

/// Flipper-rank `frk_{r,k}(G)`.
pub fn frk(g: &Graph, r: Radius, k: usize) -> Result<Rank> {
    RankQuery::flipper(r, k).rank(g)
}

/// Splitter-rank `srk_{r,k}(G)`: as flipper-rank with deletions of at most
/// `k` vertices. Deleting every vertex leaves nothing to recurse on, which
/// counts as rank 1 for the empty remainder.
pub fn srk(g: &Graph, r: Radius, k: usize) -> Result<Rank> {
    RankQuery::splitter(r, k).rank(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrkReport {
    pub t: usize,
    pub r: Radius,
    pub k: usize,
    /// `frk_{3r,k}(G)`.
    pub frk: Rank,
    pub ell: Rank,
    /// `k^(2^ell) t²`, `None` when it overflows or `ell` is unbounded.
    pub kprime: Option<u64>,
    /// Budget actually used: `k'` capped at `n`.
    pub kprime_used: usize,
    pub saturated: bool,
    /// `srk_{r,k'}(G)`, absent when `ell` is unbounded.
    pub srk: Option<Rank>,
    pub holds: bool,
}

fn kprime(k: usize, ell: usize, t: usize) -> Option<u64> {
    let exp = 1u32.checked_shl(ell as u32)?;
    (k as u64).checked_pow(exp)?.checked_mul((t * t) as u64)
}

/// `frk_{3r,k}(G) <= ell` implies `srk_{r,k'}(G) <= ell` with
/// `k' = k^(2^ell) t²`.
pub fn check_lemma_frk(g: &Graph, t: usize, r: Radius, k: usize) -> Result<FrkReport> {
    require_ktt_free(g, t)?;
    let f = frk(g, r.scale(3), k)?;
    let mut report =
        FrkReport { t, r, k, frk: f, ell: f, kprime: None, kprime_used: 0, saturated: false, srk: None, holds: true };
    let Some(ell) = f.finite() else {
        return Ok(report);
    };
    report.kprime = kprime(k, ell, t);
    let n = g.n();
    report.kprime_used = report.kprime.map_or(n, |kp| kp.min(n as u64) as usize);
    report.saturated = report.kprime.is_none_or(|kp| kp >= n as u64);
    let s = srk(g, r, report.kprime_used)?;
    report.srk = Some(s);
    report.holds = s <= Rank::Finite(ell);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_graphs, apply_pflip, generate, Partition, VertexSet};

    const R1: Radius = Radius::Finite(1);

    #[test]
    fn base_cases() {
        let k1 = Graph::empty(1);
        assert_eq!(frk(&k1, R1, 1).unwrap(), Rank::Finite(1));
        assert_eq!(srk(&k1, R1, 1).unwrap(), Rank::Finite(1));
        assert!(frk(&Graph::empty(0), R1, 1).is_err());
    }

    #[test]
    fn flipper_examples() {
        for n in 2..=5 {
            for r in [Radius::Finite(0), R1, Radius::Infinite] {
                assert_eq!(frk(&Graph::empty(n), r, 1).unwrap(), Rank::Finite(2));
            }
        }
        for r in [R1, Radius::Finite(3), Radius::Infinite] {
            assert_eq!(frk(&generate::complete(2), r, 2).unwrap(), Rank::Finite(2));
        }
        // one block only complements the whole graph; P4 is self-complementary
        assert_eq!(frk(&generate::path(4), Radius::Finite(3), 1).unwrap(), Rank::Unbounded);
    }

    #[test]
    fn splitter_examples() {
        assert_eq!(srk(&generate::path(3), R1, 1).unwrap(), Rank::Finite(2));
        for r in [R1, Radius::Finite(2), Radius::Infinite] {
            assert_eq!(srk(&generate::star(4), r, 1).unwrap(), Rank::Finite(2));
        }
        // deleting everything is allowed and ends the game
        assert_eq!(srk(&generate::complete(4), R1, 4).unwrap(), Rank::Finite(2));
        assert_eq!(srk(&generate::complete(3), R1, 1).unwrap(), Rank::Finite(3));
    }

    #[test]
    fn rank_one_only_on_k1_and_monotone_in_budget() {
        for n in 2..=4 {
            for g in all_graphs(n) {
                for r in [R1, Radius::Finite(2)] {
                    let f: Vec<Rank> = (1..=2).map(|k| frk(&g, r, k).unwrap()).collect();
                    let s: Vec<Rank> = (0..=n).map(|k| srk(&g, r, k).unwrap()).collect();
                    assert!(f.iter().chain(&s).all(|&x| x > Rank::Finite(1)));
                    assert!(f.windows(2).all(|w| w[1] <= w[0]));
                    assert!(s.windows(2).all(|w| w[1] <= w[0]));
                }
            }
        }
    }

    #[test]
    fn hereditary_and_flip_robust() {
        for seed in 0..8 {
            let g = generate::gnp(5, 0.5, seed);
            let whole = frk(&g, R1, 2).unwrap();
            for drop in 0..5 {
                let keep: VertexSet = (0..5).filter(|&v| v != drop).collect();
                assert!(frk(&g.induced(&keep), R1, 2).unwrap() <= whole);
            }
            // a 2-flip of G with budget 1 * 2 is no harder than G with budget 1
            let labels: Vec<usize> = (0..5).map(|v| (v + seed as usize) % 2).collect();
            let p = Partition::from_labels(&labels);
            let f = crate::graph::enumerate_pflips_with(&p, 2).unwrap()[seed as usize % 8].clone();
            let h = apply_pflip(&g, &p, &f).unwrap();
            assert!(frk(&h, R1, 2).unwrap() <= frk(&g, R1, 1).unwrap());
        }
    }

    #[test]
    fn lemma_holds_on_small_graphs() {
        let k1 = check_lemma_frk(&Graph::empty(1), 2, R1, 1).unwrap();
        assert!(k1.holds);
        assert_eq!(k1.ell, Rank::Finite(1));
        for n in 2..=4 {
            for g in all_graphs(n) {
                if crate::graph::find_biclique(&g, 2).unwrap().is_some() {
                    continue;
                }
                for k in [1, 2] {
                    assert!(check_lemma_frk(&g, 2, R1, k).unwrap().holds);
                }
            }
        }
        let rep = check_lemma_frk(&generate::path(3), 2, R1, 2).unwrap();
        assert!(rep.holds && rep.saturated);
    }

    #[test]
    fn kprime_arithmetic() {
        assert_eq!(kprime(2, 2, 2), Some(64));
        assert_eq!(kprime(1, 5, 3), Some(9));
        assert_eq!(kprime(2, 7, 2), None);
    }
}
