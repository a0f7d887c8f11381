use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{require_ktt_free, Graph, VertexSet};
use crate::mergewidth::{is_normalized, validate_rfs, width_unchecked, RestrainedFlipSequence};
use crate::radius::Radius;
use crate::sparsify::sparsify_set;
use crate::widths::{sw_of_order, Ordering};

/// The explicit bound on `sw_r` of the order built from a sequence of
/// radius-`(3r+1)` width `d` on a `K_{t,t}`-free graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub d: usize,
    pub t: usize,
    pub r: Radius,
    /// `d t`: far members of `t`-big parts.
    pub b1: usize,
    /// `d (d+1) t³`: far members of `t`-small parts.
    pub b2: usize,
    /// `d t²`: near members of `t`-small parts.
    pub b3: usize,
    /// `d² t`: near members of `t`-big parts.
    pub b4: usize,
    /// `2 t²`: the partially placed delta.
    pub slack: usize,
    pub total: usize,
    /// `sw_r` of the produced order.
    pub measured: usize,
    /// Largest `|Δ_i|`, below `2t²`.
    pub max_delta: usize,
}

impl BoundCertificate {
    fn new(d: usize, t: usize, r: Radius) -> BoundCertificate {
        let b1 = d * t;
        let b2 = d * (d + 1) * t.pow(3);
        let b3 = d * t * t;
        let b4 = d * d * t;
        let slack = 2 * t * t;
        BoundCertificate { d, t, r, b1, b2, b3, b4, slack, total: b1 + b2 + b3 + b4 + slack, measured: 0, max_delta: 0 }
    }

    pub fn holds(&self) -> bool {
        self.measured <= self.total
    }
}

/// Orders the vertices by the step at which they first enter
/// `Sparsify(G, P_i, t)`, ascending inside each step, and certifies the
/// separation-width of that order.
///
/// With `t = 1` the graph is edgeless and singletons are not small; vertices
/// never deleted are placed last.
pub fn order_from_rfs(g: &Graph, t: usize, seq: &RestrainedFlipSequence, r: Radius) -> Result<(Ordering, BoundCertificate)> {
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    require_ktt_free(g, t)?;
    validate_rfs(g, seq).into_result()?;
    if !is_normalized(seq) {
        return Err(Error::Precondition("sequence is not normalized (one split per step, n steps)".into()));
    }
    let d = width_unchecked(seq, r.scale(3).plus(1))?;
    let mut cert = BoundCertificate::new(d, t, r);

    let mut placed = VertexSet::with_capacity(g.n());
    let mut perm = Vec::with_capacity(g.n());
    for step in &seq.steps {
        let deleted = sparsify_set(g, &step.partition, t)?.deleted;
        let delta = deleted.difference(&placed);
        cert.max_delta = cert.max_delta.max(delta.len());
        perm.extend(delta.iter());
        placed = placed.union(&delta);
    }
    perm.extend(g.vertices().filter(|&v| !placed.contains(v)));
    let order = Ordering::new(perm)?;

    cert.measured = sw_of_order(g, &order, r)?.value;
    if !cert.holds() {
        return Err(Error::BoundViolated(format!(
            "sw_{r} of the constructed order is {} but the certificate allows {}",
            cert.measured, cert.total
        )));
    }
    Ok((order, cert))
}
