//! Deterministic and seeded graph generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

/// `C_n` for `n >= 3`; smaller `n` degrade to a path.
pub fn cycle(n: usize) -> Graph {
    if n < 3 {
        return path(n);
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

/// Star on `n` vertices: center 0, leaves `1..n`. `K_{1,k}` is `star(k + 1)`.
pub fn star(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (0, v))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

/// `rows x cols` grid, vertex `(i, j)` numbered `i * cols + j`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |i: usize, j: usize| i * cols + j;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if i + 1 < rows {
                edges.push((id(i, j), id(i + 1, j)));
            }
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
        }
    }
    Graph::new(rows * cols, edges).unwrap()
}

/// Random recursive tree: vertex `v > 0` attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    Graph::new(n, (1..n).map(|v| (rng.gen_range(0..v), v)).collect::<Vec<_>>()).unwrap()
}

/// Uniform permutation of `0..n`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng(seed));
    perm
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Random `K_{t,t}`-free graph: candidate pairs are visited in random order,
/// each proposed with probability `p`, and rejected if it would complete a
/// `K_{t,t}`.
pub fn random_ktt_free(n: usize, p: f64, t: usize, seed: u64) -> Graph {
    assert!(n <= 64 && t >= 1);
    let mut rng = rng(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut nbr = vec![0u64; n];
    for (u, v) in pairs {
        if !rng.gen_bool(p.clamp(0.0, 1.0)) {
            continue;
        }
        nbr[u] |= 1 << v;
        nbr[v] |= 1 << u;
        if creates_biclique(&nbr, u, v, t) {
            nbr[u] &= !(1 << v);
            nbr[v] &= !(1 << u);
        }
    }
    let edges = (0..n).flat_map(|u| {
        let row = nbr[u];
        (u + 1..n).filter(move |&v| row >> v & 1 == 1).map(move |v| (u, v))
    });
    Graph::new(n, edges.collect::<Vec<_>>()).unwrap()
}

/// Whether some `K_{t,t}` uses the edge `uv` (with `u` on the left).
fn creates_biclique(nbr: &[u64], u: usize, v: usize, t: usize) -> bool {
    // left side: u plus t-1 vertices from N(v) \ {u}; right: v plus t-1 from the common neighbourhood
    fn pick(nbr: &[u64], pool: u64, t_left: usize, common: u64, need_right: usize) -> bool {
        if t_left == 0 {
            return common.count_ones() as usize >= need_right;
        }
        let mut rest = pool;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = common & nbr[x];
            if next.count_ones() as usize >= need_right && pick(nbr, rest, t_left - 1, next, need_right) {
                return true;
            }
        }
        false
    }
    let common = nbr[u] & !(1 << v);
    let pool = nbr[v] & !(1 << u);
    // the right side needs v and t-1 more vertices adjacent to every left vertex
    pick(nbr, pool, t - 1, common, t - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_ktt_free;

    #[test]
    fn shapes() {
        assert_eq!(path(5).m(), 4);
        assert_eq!(cycle(5).m(), 5);
        assert_eq!(star(5).degree(0), 4);
        assert_eq!(complete(5).m(), 10);
        assert_eq!(grid(3, 3).m(), 12);
        assert_eq!(complete_bipartite(2, 3).m(), 6);
    }

    #[test]
    fn seeded_generators_are_reproducible() {
        assert_eq!(gnp(10, 0.3, 7), gnp(10, 0.3, 7));
        assert_eq!(gnp(10, 0.0, 7).m(), 0);
        assert_eq!(random_tree(15, 3), random_tree(15, 3));
        assert_eq!(random_tree(15, 3).m(), 14);
        assert!(random_tree(15, 3).is_connected());
    }

    #[test]
    fn ktt_free_generator() {
        for seed in 0..30 {
            for t in 2..=3 {
                let g = random_ktt_free(14, 0.5, t, seed);
                assert!(is_ktt_free(&g, t).unwrap().0, "seed {seed} t {t}");
            }
        }
        // dense enough to be interesting
        assert!(random_ktt_free(14, 0.9, 2, 1).m() > 14);
    }
}
