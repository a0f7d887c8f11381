//! Exact minimisation over vertex orderings by branch and bound.
//!
//! Orders are built left to right. For `sw` and `scol` the cost of the next
//! step depends only on the set of already placed vertices, so a prefix set
//! reached again with no better partial maximum is pruned. `wcol` carries the
//! per-vertex weak-reach counters of unplaced vertices in its state.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::small::{bits, SmallGraph};
use crate::graph::Graph;
use crate::radius::Radius;
use crate::widths::{
    degeneracy, prefix_separator, result, scol_profile, small, sw_profile, wcol_profile, Ordering, Param, WidthResult,
};

#[derive(Clone, Copy, Debug)]
pub struct ExactCaps {
    pub max_n: usize,
}

impl Default for ExactCaps {
    fn default() -> Self {
        ExactCaps { max_n: 10 }
    }
}

fn check_cap(g: &Graph, caps: ExactCaps) -> Result<SmallGraph> {
    if g.n() > caps.max_n {
        return Err(Error::CapExceeded { what: "exact ordering search vertices (use the greedy variant)", got: g.n(), cap: caps.max_n });
    }
    small(g)
}

/// Greedy upper bound for separation-width: repeatedly append the vertex
/// whose addition gives the smallest largest separator into the new prefix
/// (ties to the smallest index).
pub fn sw_greedy(g: &Graph, r: Radius) -> Result<WidthResult> {
    let sg = small(g)?;
    let order = greedy_sw_order(&sg, r);
    Ok(result(Param::Sw, r, &order, sw_profile(&sg, &order, r), false))
}

fn greedy_sw_order(g: &SmallGraph, r: Radius) -> Ordering {
    let mut placed = 0u64;
    let mut perm = Vec::with_capacity(g.n);
    for _ in 0..g.n {
        let v = bits(g.full() & !placed)
            .min_by_key(|&v| (prefix_separator(g, placed | 1 << v, r), v))
            .unwrap();
        placed |= 1 << v;
        perm.push(v);
    }
    Ordering::new(perm).unwrap()
}

/// Bottleneck search where the cost of placing `v` after the set `s` is
/// `step(s, v)`. Returns the best order strictly better than `incumbent`, if any.
fn setwise_search(g: &SmallGraph, incumbent: usize, step: &dyn Fn(u64, usize) -> usize) -> Option<(usize, Vec<usize>)> {
    struct Search<'a> {
        full: u64,
        step: &'a dyn Fn(u64, usize) -> usize,
        best: usize,
        best_perm: Option<Vec<usize>>,
        seen: HashMap<u64, usize>,
        perm: Vec<usize>,
    }
    impl Search<'_> {
        fn go(&mut self, s: u64, partial: usize) {
            if s == self.full {
                if partial < self.best {
                    self.best = partial;
                    self.best_perm = Some(self.perm.clone());
                }
                return;
            }
            match self.seen.get(&s) {
                Some(&p) if p <= partial => return,
                _ => {
                    self.seen.insert(s, partial);
                }
            }
            for v in bits(self.full & !s) {
                let cost = partial.max((self.step)(s, v));
                if cost >= self.best {
                    continue;
                }
                self.perm.push(v);
                self.go(s | 1 << v, cost);
                self.perm.pop();
            }
        }
    }
    let mut search = Search { full: g.full(), step, best: incumbent, best_perm: None, seen: HashMap::new(), perm: Vec::new() };
    search.go(0, 0);
    search.best_perm.map(|p| (search.best, p))
}

/// Exact separation-width with a witness order.
pub fn sw_exact_with(g: &Graph, r: Radius, caps: ExactCaps) -> Result<WidthResult> {
    let sg = check_cap(g, caps)?;
    let greedy = greedy_sw_order(&sg, r);
    let incumbent = sw_profile(&sg, &greedy, r).into_iter().max().unwrap_or(0);
    // placing v after s exposes the new prefix s + v; the empty prefix costs 0
    let step = |s: u64, v: usize| prefix_separator(&sg, s | 1 << v, r);
    let order = match setwise_search(&sg, incumbent, &step) {
        Some((_, perm)) => Ordering::new(perm)?,
        None => greedy,
    };
    Ok(result(Param::Sw, r, &order, sw_profile(&sg, &order, r), true))
}

pub fn sw_exact(g: &Graph, r: Radius) -> Result<WidthResult> {
    sw_exact_with(g, r, ExactCaps::default())
}

/// Exact strong `r`-colouring number with a witness order.
pub fn scol_exact_with(g: &Graph, r: Radius, caps: ExactCaps) -> Result<WidthResult> {
    let sg = check_cap(g, caps)?;
    let (_, start) = degeneracy(g);
    let incumbent = scol_profile(&sg, &start, r).into_iter().max().unwrap_or(0);
    let step = |s: u64, v: usize| 1 + sg.sep(v, s, r).count_ones() as usize;
    let order = match setwise_search(&sg, incumbent, &step) {
        Some((_, perm)) => Ordering::new(perm)?,
        None => start,
    };
    Ok(result(Param::Scol, r, &order, scol_profile(&sg, &order, r), true))
}

pub fn scol_exact(g: &Graph, r: Radius) -> Result<WidthResult> {
    scol_exact_with(g, r, ExactCaps::default())
}

/// Exact weak `r`-colouring number with a witness order.
///
/// Placing `u` after the prefix `S` adds `u` to the weak reach of every
/// vertex within distance `r` of `u` in `G - S`; a vertex's counter is final
/// once it is placed.
pub fn wcol_exact_with(g: &Graph, r: Radius, caps: ExactCaps) -> Result<WidthResult> {
    let sg = check_cap(g, caps)?;
    let (_, start) = degeneracy(g);
    let incumbent = wcol_profile(&sg, &start, r).into_iter().max().unwrap_or(0);

    struct Search<'a> {
        g: &'a SmallGraph,
        r: Radius,
        best: usize,
        best_perm: Option<Vec<usize>>,
        seen: HashMap<(u64, Vec<u8>), usize>,
        perm: Vec<usize>,
    }
    impl Search<'_> {
        fn go(&mut self, s: u64, counts: &mut Vec<u8>, partial: usize) {
            let full = self.g.full();
            if s == full {
                if partial < self.best {
                    self.best = partial;
                    self.best_perm = Some(self.perm.clone());
                }
                return;
            }
            let pending: Vec<u8> = bits(full & !s).map(|v| counts[v]).collect();
            let lower = bits(full & !s).map(|v| 1 + counts[v] as usize).max().unwrap_or(0).max(partial);
            if lower >= self.best {
                return;
            }
            let key = (s, pending);
            match self.seen.get(&key) {
                Some(&p) if p <= partial => return,
                _ => {
                    self.seen.insert(key, partial);
                }
            }
            for u in bits(full & !s) {
                let cost = partial.max(1 + counts[u] as usize);
                if cost >= self.best {
                    continue;
                }
                let touched = self.g.ball(u, self.r, !s) & !(1u64 << u);
                for v in bits(touched) {
                    counts[v] += 1;
                }
                self.perm.push(u);
                self.go(s | 1 << u, counts, cost);
                self.perm.pop();
                for v in bits(touched) {
                    counts[v] -= 1;
                }
            }
        }
    }
    let mut search = Search { g: &sg, r, best: incumbent, best_perm: None, seen: HashMap::new(), perm: Vec::new() };
    search.go(0, &mut vec![0u8; sg.n], 0);
    let order = match search.best_perm {
        Some(perm) => Ordering::new(perm)?,
        None => start,
    };
    Ok(result(Param::Wcol, r, &order, wcol_profile(&sg, &order, r), true))
}

pub fn wcol_exact(g: &Graph, r: Radius) -> Result<WidthResult> {
    wcol_exact_with(g, r, ExactCaps::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;
    use crate::widths::{scol_of_order, sw_of_order, wcol_of_order};

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest.is_empty() {
                out.push(cur.clone());
                return;
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                cur.push(v);
                rec(rest, cur, out);
                cur.pop();
                rest.insert(i, v);
            }
        }
        let mut out = Vec::new();
        rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
        out
    }

    fn brute(g: &Graph, r: Radius, f: fn(&Graph, &Ordering, Radius) -> Result<WidthResult>) -> usize {
        permutations(g.n())
            .into_iter()
            .map(|p| f(g, &Ordering::new(p).unwrap(), r).unwrap().value)
            .min()
            .unwrap()
    }

    #[test]
    fn exact_matches_all_orderings() {
        for seed in 0..12 {
            let g = generate::gnp(6, 0.45, seed);
            for r in [Radius::Finite(1), Radius::Finite(2), Radius::Infinite] {
                let sw = sw_exact(&g, r).unwrap();
                assert_eq!(sw.value, brute(&g, r, sw_of_order), "sw seed {seed} r {r}");
                assert_eq!(sw_of_order(&g, &sw.order, r).unwrap().value, sw.value);
                let scol = scol_exact(&g, r).unwrap();
                assert_eq!(scol.value, brute(&g, r, scol_of_order), "scol seed {seed} r {r}");
                let wcol = wcol_exact(&g, r).unwrap();
                assert_eq!(wcol.value, brute(&g, r, wcol_of_order), "wcol seed {seed} r {r}");
                assert_eq!(wcol_of_order(&g, &wcol.order, r).unwrap().value, wcol.value);
            }
        }
    }

    #[test]
    fn paths_and_cliques() {
        for n in 2..=8 {
            for r in [1, 2, 3, 7] {
                assert_eq!(sw_exact(&generate::path(n), Radius::Finite(r)).unwrap().value, 1);
            }
        }
        for n in 1..=6 {
            assert_eq!(sw_exact(&generate::complete(n), Radius::Finite(1)).unwrap().value, n - 1);
        }
        assert_eq!(sw_exact(&generate::cycle(5), Radius::Finite(1)).unwrap().value, 2);
    }

    #[test]
    fn greedy_bounds_exact() {
        assert_eq!(sw_greedy(&generate::path(6), Radius::Finite(2)).unwrap().value, 1);
        assert_eq!(sw_greedy(&generate::complete(5), Radius::Finite(2)).unwrap().value, 4);
        for seed in 0..10 {
            let g = generate::random_tree(9, seed);
            let greedy = sw_greedy(&g, Radius::Finite(2)).unwrap();
            let exact = sw_exact(&g, Radius::Finite(2)).unwrap();
            assert!(greedy.value >= exact.value);
            assert!(!greedy.exact && exact.exact);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = generate::path(11);
        assert!(matches!(sw_exact(&g, Radius::Finite(1)), Err(Error::CapExceeded { .. })));
        assert!(sw_exact_with(&g, Radius::Finite(1), ExactCaps { max_n: 11 }).is_ok());
    }
}
