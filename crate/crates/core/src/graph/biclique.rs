use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Two disjoint `t`-sets with every cross pair an edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Biclique {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Clone, Copy, Debug)]
pub struct BicliqueCaps {
    pub max_n: usize,
    pub max_t: usize,
}

impl Default for BicliqueCaps {
    fn default() -> Self {
        BicliqueCaps { max_n: 64, max_t: 4 }
    }
}

/// Searches for a (not necessarily induced) `K_{t,t}` subgraph.
///
/// Left-side candidates are tried in decreasing degree order; a branch is
/// dropped as soon as the common neighbourhood of the chosen left vertices
/// has fewer than `t` members. The common neighbourhood never meets the
/// left side since there are no self-loops.
pub fn find_biclique_with(g: &Graph, t: usize, caps: BicliqueCaps) -> Result<Option<Biclique>> {
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    let n = g.n();
    if n > caps.max_n.min(64) {
        return Err(Error::CapExceeded { what: "biclique search vertices", got: n, cap: caps.max_n.min(64) });
    }
    if t > caps.max_t {
        return Err(Error::CapExceeded { what: "biclique size t", got: t, cap: caps.max_t });
    }
    let nbr: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u)).collect();
    let mut candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= t).collect();
    candidates.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    fn grow(
        nbr: &[u64],
        candidates: &[usize],
        t: usize,
        start: usize,
        common: u64,
        chosen: &mut Vec<usize>,
    ) -> Option<u64> {
        if chosen.len() == t {
            return Some(common);
        }
        let needed = t - chosen.len();
        for i in start..candidates.len() {
            if candidates.len() - i < needed {
                break;
            }
            let v = candidates[i];
            let next = common & nbr[v];
            if (next.count_ones() as usize) < t {
                continue;
            }
            chosen.push(v);
            if let Some(found) = grow(nbr, candidates, t, i + 1, next, chosen) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut chosen = Vec::with_capacity(t);
    Ok(grow(&nbr, &candidates, t, 0, all, &mut chosen).map(|common| {
        let mut left = chosen.clone();
        left.sort_unstable();
        let right = (0..n).filter(|&v| common >> v & 1 == 1).take(t).collect();
        Biclique { left, right }
    }))
}

pub fn find_biclique(g: &Graph, t: usize) -> Result<Option<Biclique>> {
    find_biclique_with(g, t, BicliqueCaps::default())
}

/// Whether `g` is `K_{t,t}`-free, with a witness when it is not.
pub fn is_ktt_free(g: &Graph, t: usize) -> Result<(bool, Option<Biclique>)> {
    let witness = find_biclique(g, t)?;
    Ok((witness.is_none(), witness))
}

/// Error unless `g` is `K_{t,t}`-free.
pub(crate) fn require_ktt_free(g: &Graph, t: usize) -> Result<()> {
    match find_biclique(g, t)? {
        None => Ok(()),
        Some(witness) => Err(Error::NotKttFree { t, witness }),
    }
}
