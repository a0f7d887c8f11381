use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::generate::complete;
use crate::graph::small::{bits, SmallGraph};
use crate::graph::{apply_pflip, FlipSpec, Graph, Partition, VertexSet};
use crate::mergewidth::{validate_rfs, width_unchecked, RestrainedFlipSequence, Step};
use crate::radius::Radius;
use crate::widths::{small, sw_of_order, Ordering};

#[derive(Clone, Copy, Debug)]
pub struct ShatterCaps {
    pub max_m: usize,
    pub max_n: usize,
    /// Larger `m` or `n` is still accepted when at most this many subsets
    /// have to be examined.
    pub max_subsets: u64,
}

impl Default for ShatterCaps {
    fn default() -> Self {
        ShatterCaps { max_m: 6, max_n: 20, max_subsets: 1 << 16 }
    }
}

fn subsets_up_to(n: usize, m: usize) -> u64 {
    let mut total = 0u64;
    let mut binom = 1u64;
    for j in 0..=m.min(n) {
        total = total.saturating_add(binom);
        binom = binom.saturating_mul((n - j) as u64) / (j as u64 + 1);
    }
    total
}

/// `max_{|A| <= m} |A| + |{N(v) ∩ A : v ∉ A}|`.
pub fn shatter(g: &Graph, m: usize) -> Result<usize> {
    shatter_with(g, m, ShatterCaps::default())
}

pub fn shatter_with(g: &Graph, m: usize, caps: ShatterCaps) -> Result<usize> {
    let n = g.n();
    let count = subsets_up_to(n, m);
    if (m > caps.max_m || n > caps.max_n) && count > caps.max_subsets {
        let (what, got, cap) =
            if m > caps.max_m { ("shatter function order", m, caps.max_m) } else { ("shatter function vertices", n, caps.max_n) };
        return Err(Error::CapExceeded { what, got, cap });
    }
    let sg = small(g)?;
    let mut best = 0;
    let mut chosen = Vec::with_capacity(m);
    visit_subsets(n, m.min(n), 0, 0, &mut chosen, &mut |a| {
        let traces: HashSet<u64> = bits(sg.full() & !a).map(|v| sg.nbr[v] & a).collect();
        best = best.max(a.count_ones() as usize + traces.len());
    });
    Ok(best)
}

fn visit_subsets(n: usize, m: usize, from: usize, mask: u64, chosen: &mut Vec<usize>, f: &mut dyn FnMut(u64)) {
    f(mask);
    if chosen.len() == m {
        return;
    }
    for v in from..n {
        chosen.push(v);
        visit_subsets(n, m, v + 1, mask | 1 << v, chosen, f);
        chosen.pop();
    }
}

/// The sequence built from an order, with the width it achieves and the two
/// bounds it must respect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MwClaim {
    pub r: Radius,
    pub width: usize,
    /// `sw_{r+1}` of the order.
    pub k: usize,
    /// `2^{k+1} + 1`, saturating.
    pub exp_bound: usize,
    /// `pi_G(k)` when it is within the shatter caps.
    pub shatter: Option<usize>,
    pub shatter_bound: Option<usize>,
}

/// Builds `(P_i, R_i, G_i)` from `v_1 < .. < v_n`: the prefix `v_{<i}` is
/// isolated, `P_i` keeps the prefix as singletons and groups the rest by
/// their neighbourhood in the prefix, and `R_i = E(G_i)` except that the
/// first restraint is all pairs.
pub fn mw_from_order(g: &Graph, ord: &Ordering, r: Radius) -> Result<(RestrainedFlipSequence, MwClaim)> {
    ord.check_len(g.n())?;
    let sg = small(g)?;
    let n = g.n();
    let mut steps = Vec::with_capacity(n.max(1));
    for i in 0..n.max(1) {
        let prefix = ord.prefix_mask(i);
        let labels: Vec<(u64, u64)> = (0..n)
            .map(|v| if prefix >> v & 1 == 1 { (1, v as u64) } else { (0, sg.nbr[v] & prefix) })
            .collect();
        let partition = Partition::from_labels(&labels);
        let flips = isolation_flips(&sg, &partition, prefix);
        let isolated = g.isolate_vertices(&bits(prefix).collect::<VertexSet>())?;
        let gi = apply_pflip(g, &partition, &flips)?;
        if gi != isolated {
            return Err(Error::BoundViolated(format!("step {i}: reconstructed flip does not isolate the prefix")));
        }
        let restraint = if i == 0 { complete(n) } else { isolated };
        steps.push(Step { partition, restraint, flips });
    }
    let seq = RestrainedFlipSequence { n, steps };
    validate_rfs(g, &seq).into_result().map_err(|e| Error::BoundViolated(format!("constructed sequence invalid: {e}")))?;

    let width = width_unchecked(&seq, r)?;
    let k = sw_of_order(g, ord, r.plus(1))?.value;
    let exp_bound = 1usize.checked_shl(k as u32 + 1).unwrap_or(usize::MAX).saturating_add(1);
    let shatter = match shatter(g, k) {
        Ok(p) => Some(p),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let shatter_bound = shatter.map(|p| 2 * p + 1);
    let claim = MwClaim { r, width, k, exp_bound, shatter, shatter_bound };
    if width > exp_bound || shatter_bound.is_some_and(|b| width > b) {
        return Err(Error::BoundViolated(format!(
            "width {width} exceeds 2^(k+1)+1 = {exp_bound} or 2*pi(k)+1 = {shatter_bound:?} with k = {k}"
        )));
    }
    Ok((seq, claim))
}

/// Prefix singleton `{u}` is flipped with a class exactly when the class lies
/// in `N(u)` (classes agree on the prefix), and with another prefix singleton
/// when they are adjacent.
fn isolation_flips(g: &SmallGraph, p: &Partition, prefix: u64) -> FlipSpec {
    let mut flips = FlipSpec::new();
    for u in bits(prefix) {
        let a = p.block_of(u);
        for (b, block) in p.blocks().iter().enumerate() {
            if b != a && block.iter().all(|&w| g.has_edge(u, w)) {
                flips.insert(a, b);
            }
        }
    }
    flips
}
