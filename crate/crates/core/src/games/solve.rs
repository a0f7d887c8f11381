use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::small::{bits, SmallGraph};
use crate::graph::{require_ktt_free, Graph};
use crate::radius::Radius;
use crate::widths::small;

#[derive(Clone, Copy, Debug)]
pub struct CopCaps {
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for CopCaps {
    fn default() -> Self {
        CopCaps { max_n: 8, max_k: 3 }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FlipCaps {
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for FlipCaps {
    fn default() -> Self {
        FlipCaps { max_n: 6, max_k: 2 }
    }
}

impl FlipCaps {
    pub(crate) fn check(&self, n: usize, k: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::CapExceeded { what: "k-flip enumeration vertices", got: n, cap: self.max_n });
        }
        if k > self.max_k {
            return Err(Error::CapExceeded { what: "k-flip enumeration width", got: k, cap: self.max_k });
        }
        Ok(())
    }
}

/// Every `k`-flip of `g`, one per distinct edge set; the first is `g`.
pub fn kflip_graphs(g: &Graph, k: usize) -> Result<Vec<Graph>> {
    FlipCaps::default().check(g.n(), k)?;
    Ok(kflips(&SmallGraph::from_graph(g), k).iter().map(SmallGraph::to_graph).collect())
}

/// Partitions into at most `k` blocks (as restricted growth strings) times
/// every set of block pairs to flip, deduplicated by edge set.
pub(crate) fn kflips(g: &SmallGraph, k: usize) -> Vec<SmallGraph> {
    let n = g.n;
    let mut out = vec![g.clone()];
    let mut seen: HashMap<Vec<u64>, ()> = HashMap::from([(g.nbr.clone(), ())]);
    if k == 0 {
        return out;
    }
    let mut labels = vec![0usize; n];
    loop {
        let blocks = labels.iter().max().map_or(0, |&m| m + 1);
        let pairs: Vec<(usize, usize)> = (0..blocks).flat_map(|i| (i..blocks).map(move |j| (i, j))).collect();
        for spec in 0u64..1 << pairs.len() {
            let mut flipped = [[false; 8]; 8];
            for (bit, &(i, j)) in pairs.iter().enumerate() {
                if spec >> bit & 1 == 1 {
                    flipped[i][j] = true;
                    flipped[j][i] = true;
                }
            }
            let nbr: Vec<u64> = (0..n)
                .map(|u| {
                    let mut mask = g.nbr[u];
                    for v in 0..n {
                        if v != u && flipped[labels[u]][labels[v]] {
                            mask ^= 1 << v;
                        }
                    }
                    mask
                })
                .collect();
            if seen.insert(nbr.clone(), ()).is_none() {
                out.push(SmallGraph { n, nbr });
            }
        }
        if !next_growth_string(&mut labels, k) {
            break;
        }
    }
    out
}

fn next_growth_string(labels: &mut [usize], k: usize) -> bool {
    for i in (1..labels.len()).rev() {
        let bound = labels[..i].iter().max().copied().unwrap_or(0) + 1;
        if labels[i] < bound && labels[i] + 1 < k {
            labels[i] += 1;
            for x in &mut labels[i + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    false
}

/// True iff `k` cops catch a speed-`r` robber on `g`.
pub fn copwidth_exact(g: &Graph, r: Radius, k: usize) -> Result<bool> {
    copwidth_exact_with(g, r, k, CopCaps::default())
}

/// Least fixpoint over states `(C, w)`: cops at `C`, robber at `w ∉ C`.
/// The cops win from `(C, w)` if some `C'` leaves every vertex the robber
/// can reach avoiding `C ∩ C'` either in `C'` or in a winning state `(C', w')`.
pub fn copwidth_exact_with(g: &Graph, r: Radius, k: usize, caps: CopCaps) -> Result<bool> {
    if g.n() > caps.max_n {
        return Err(Error::CapExceeded { what: "cop game vertices", got: g.n(), cap: caps.max_n });
    }
    if k > caps.max_k {
        return Err(Error::CapExceeded { what: "cop game width", got: k, cap: caps.max_k });
    }
    let sg = small(g)?;
    let n = sg.n;
    let sets: Vec<u64> = (0..1u64 << n).filter(|c| c.count_ones() as usize <= k).collect();
    // reach[(blocked, w)] cached lazily
    let mut reach: HashMap<(u64, usize), u64> = HashMap::new();
    let mut ball = |blocked: u64, w: usize| *reach.entry((blocked, w)).or_insert_with(|| sg.ball(w, r, !blocked));
    let mut win = vec![0u64; sets.len()];
    loop {
        let mut changed = false;
        for (ci, &c) in sets.iter().enumerate() {
            for w in bits(sg.full() & !c & !win[ci]) {
                let good = sets.iter().enumerate().any(|(di, &d)| {
                    let escape = ball(c & d, w) & !d & !win[di];
                    escape == 0
                });
                if good {
                    win[ci] |= 1 << w;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(win[0] == sg.full())
}

/// Least `k` with a cop win; `k = n` always suffices.
pub fn copwidth(g: &Graph, r: Radius) -> Result<usize> {
    let caps = CopCaps { max_k: g.n(), ..CopCaps::default() };
    for k in 0..=g.n() {
        if copwidth_exact_with(g, r, k, caps)? {
            return Ok(k);
        }
    }
    unreachable!("n cops always win")
}

/// True iff the flipper wins the radius-`r`, width-`k` flipper game.
pub fn flipper_game_solve(g: &Graph, r: Radius, k: usize) -> Result<bool> {
    flipper_game_solve_with(g, r, k, FlipCaps::default())
}

/// States are `(current flip, runner)`. The flipper wins from `(H, v)` if
/// some `H'` leaves every vertex within distance `r` of `v` in `H` either
/// isolated in `H'` or in a winning state `(H', v')`. The game starts in
/// `G` itself, so a runner starting on an isolated vertex is trapped at once.
pub fn flipper_game_solve_with(g: &Graph, r: Radius, k: usize, caps: FlipCaps) -> Result<bool> {
    caps.check(g.n(), k)?;
    if k == 0 {
        return Err(Error::Precondition("flipper game width must be at least 1".into()));
    }
    let sg = SmallGraph::from_graph(g);
    let n = sg.n;
    let flips = kflips(&sg, k);
    let isolated: Vec<u64> =
        flips.iter().map(|h| (0..n).filter(|&v| h.nbr[v] == 0).fold(0u64, |m, v| m | 1 << v)).collect();
    let balls: Vec<Vec<u64>> = flips.iter().map(|h| (0..n).map(|v| h.ball(v, r, h.full())).collect()).collect();
    let mut win = vec![0u64; flips.len()];
    loop {
        let mut changed = false;
        for hi in 0..flips.len() {
            for v in bits(sg.full() & !win[hi]) {
                let reach = balls[hi][v];
                if (0..flips.len()).any(|ni| reach & !isolated[ni] & !win[ni] == 0) {
                    win[hi] |= 1 << v;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok((isolated[0] | win[0]) == sg.full())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FwCwReport {
    pub t: usize,
    pub r: Radius,
    /// Least width at which the flipper wins at radius `3r`, or the cap + 1
    /// when no width up to the cap wins (then a lower bound).
    pub fw: usize,
    pub fw_is_lower_bound: bool,
    pub copwidth: usize,
    /// `2 fw t²`.
    pub bound: usize,
    pub holds: bool,
}

/// `copwidth_r(G) <= 2 fw_{3r}(G) t²` by solving both games.
///
/// If the flipper cannot win within the width cap, `fw` exceeds the cap and
/// checking against cap + 1 is sound because the bound grows with `fw`.
pub fn check_fw_cw(g: &Graph, t: usize, r: Radius) -> Result<FwCwReport> {
    require_ktt_free(g, t)?;
    let caps = FlipCaps::default();
    let mut fw = None;
    for k in 1..=caps.max_k {
        if flipper_game_solve_with(g, r.scale(3), k, caps)? {
            fw = Some(k);
            break;
        }
    }
    let fw_is_lower_bound = fw.is_none();
    let fw = fw.unwrap_or(caps.max_k + 1);
    let cw = copwidth(g, r)?;
    let bound = 2 * fw * t * t;
    Ok(FwCwReport { t, r, fw, fw_is_lower_bound, copwidth: cw, bound, holds: cw <= bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_pflips_with, generate, apply_pflip, Partition};
    use std::collections::HashSet;

    fn growth_strings(n: usize, k: usize) -> usize {
        let mut labels = vec![0; n];
        let mut count = 1;
        while next_growth_string(&mut labels, k) {
            count += 1;
        }
        count
    }

    #[test]
    fn growth_strings_count_partitions() {
        // Stirling numbers of the second kind summed up to k blocks
        assert_eq!(growth_strings(4, 2), 1 + 7);
        assert_eq!(growth_strings(5, 3), 1 + 15 + 25);
        assert_eq!(growth_strings(3, 3), 5);
        assert_eq!(growth_strings(1, 2), 1);
    }

    #[test]
    fn kflips_match_partition_enumeration() {
        for seed in 0..5 {
            let g = generate::gnp(5, 0.5, seed);
            let fast: HashSet<Graph> = kflip_graphs(&g, 2).unwrap().into_iter().collect();
            let mut slow = HashSet::new();
            for labels in 0u32..1 << 5 {
                let p = Partition::from_labels(&(0..5).map(|v| labels >> v & 1).collect::<Vec<_>>());
                for f in enumerate_pflips_with(&p, 2).unwrap() {
                    slow.insert(apply_pflip(&g, &p, &f).unwrap());
                }
            }
            assert_eq!(fast, slow);
            assert_eq!(kflip_graphs(&g, 2).unwrap()[0], g);
        }
    }

    #[test]
    fn cop_game_examples() {
        assert!(copwidth_exact(&Graph::empty(1), Radius::Finite(1), 1).unwrap());
        assert!(!copwidth_exact(&generate::cycle(4), Radius::Finite(1), 1).unwrap());
        // with two cops the robber always has a free neighbour to step to
        assert!(!copwidth_exact(&generate::cycle(4), Radius::Finite(1), 2).unwrap());
        assert!(copwidth_exact(&generate::cycle(4), Radius::Finite(1), 3).unwrap());
        let g = generate::gnp(5, 0.5, 2);
        let caps = CopCaps { max_k: 5, ..CopCaps::default() };
        assert!(copwidth_exact_with(&g, Radius::Infinite, 5, caps).unwrap());
        assert!(!copwidth_exact(&generate::complete(4), Radius::Finite(1), 3).unwrap());
        assert_eq!(copwidth(&generate::complete(4), Radius::Finite(1)).unwrap(), 4);
        assert!(matches!(copwidth_exact(&generate::path(9), Radius::Finite(1), 1), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn cop_game_is_monotone_in_k() {
        for seed in 0..10 {
            let g = generate::gnp(6, 0.4, seed);
            let caps = CopCaps { max_k: 6, ..CopCaps::default() };
            let wins: Vec<bool> = (0..=6).map(|k| copwidth_exact_with(&g, Radius::Finite(1), k, caps).unwrap()).collect();
            assert!(wins.windows(2).all(|w| !w[0] || w[1]));
        }
    }

    #[test]
    fn flipper_game_examples() {
        assert!(flipper_game_solve(&Graph::empty(1), Radius::Finite(1), 1).unwrap());
        assert!(flipper_game_solve(&Graph::empty(4), Radius::Finite(2), 1).unwrap());
        assert!(flipper_game_solve(&generate::path(3), Radius::Finite(1), 2).unwrap());
        // one block can only complement the whole graph, which never isolates
        // a vertex of P3 and its complement
        assert!(!flipper_game_solve(&generate::path(3), Radius::Finite(1), 1).unwrap());
        assert!(matches!(flipper_game_solve(&generate::path(7), Radius::Finite(1), 1), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn fw_cw_small_cases() {
        let rep = check_fw_cw(&Graph::empty(1), 2, Radius::Finite(1)).unwrap();
        assert!(rep.holds && rep.fw == 1 && rep.copwidth == 1);
        assert!(check_fw_cw(&generate::path(4), 2, Radius::Finite(1)).unwrap().holds);
        for seed in 0..6 {
            assert!(check_fw_cw(&generate::random_tree(6, seed), 2, Radius::Finite(1)).unwrap().holds);
        }
    }
}
