use crate::graph::Graph;
use crate::widths::Ordering;

/// Degeneracy by repeated minimum-degree removal. The witness lists the
/// removal order reversed, so every vertex has at most `value` earlier
/// neighbours.
pub fn degeneracy(g: &Graph) -> (usize, Ordering) {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    let mut value = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        value = value.max(deg[v]);
        removed[v] = true;
        removal.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    removal.reverse();
    (value, Ordering::new(removal).expect("removal order is a permutation"))
}
