//! Restrained flip sequences: validation, radius-r width, normalization and
//! the two conversions between separation-width orders and sequences.
//!
//! A sequence is a list of steps `(P_i, R_i, F_i)`. The restraint `R_i` is
//! stored as a graph on `V` whose edges are the allowed pairs, and `G_i` is
//! never stored: it is `apply_pflip(G, P_i, F_i)`.

mod backward;
mod forward;
mod normalize;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::generate::complete;
use crate::graph::{apply_pflip, FlipSpec, Graph, Partition};
use crate::radius::Radius;

pub use backward::{order_from_rfs, BoundCertificate};
pub use forward::{mw_from_order, shatter, shatter_with, MwClaim, ShatterCaps};
pub use normalize::{is_normalized, normalize_rfs};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub partition: Partition,
    /// Allowed pairs, as the edges of a graph on `V`.
    pub restraint: Graph,
    pub flips: FlipSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrainedFlipSequence {
    pub n: usize,
    pub steps: Vec<Step>,
}

impl RestrainedFlipSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The one-step sequence `({V}, all pairs, G)`; valid only when `n <= 1`.
    pub fn trivial(n: usize) -> RestrainedFlipSequence {
        RestrainedFlipSequence {
            n,
            steps: vec![Step { partition: Partition::whole(n), restraint: complete(n), flips: FlipSpec::new() }],
        }
    }

    /// The graph `G_i` of step `i`.
    pub fn flipped(&self, g: &Graph, i: usize) -> Result<Graph> {
        let step = &self.steps[i];
        apply_pflip(g, &step.partition, &step.flips)
    }

    /// JSON with full restraints, or with each restraint given as the pairs
    /// removed from the previous one (the first relative to all pairs).
    pub fn to_json(&self, compact: bool) -> Result<String> {
        let mut prev = complete(self.n);
        let mut steps = Vec::with_capacity(self.steps.len());
        for (i, step) in self.steps.iter().enumerate() {
            let (restraint, removed) = if compact {
                if let Some((u, v)) = step.restraint.edges().find(|&(u, v)| !prev.has_edge(u, v)) {
                    return Err(Error::InvalidSequence {
                        step: i,
                        reason: format!("restraint gains pair ({u}, {v}); the compact form needs shrinking restraints"),
                    });
                }
                (None, Some(prev.edges().filter(|&(u, v)| !step.restraint.has_edge(u, v)).collect()))
            } else {
                (Some(step.restraint.edges().collect()), None)
            };
            steps.push(RawStep {
                blocks: step.partition.blocks().to_vec(),
                restraint,
                removed,
                flips: step.flips.pairs().collect(),
            });
            prev = step.restraint.clone();
        }
        Ok(serde_json::to_string(&RawSequence { schema: 1, n: self.n, compact, steps })?)
    }

    pub fn from_json(text: &str) -> Result<RestrainedFlipSequence> {
        let raw: RawSequence = serde_json::from_str(text)?;
        raw.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct RawStep {
    blocks: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    restraint: Option<Vec<(usize, usize)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    removed: Option<Vec<(usize, usize)>>,
    flips: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawSequence {
    schema: u32,
    n: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    compact: bool,
    steps: Vec<RawStep>,
}

impl TryFrom<RawSequence> for RestrainedFlipSequence {
    type Error = Error;

    fn try_from(raw: RawSequence) -> Result<Self> {
        if raw.schema != 1 {
            return Err(Error::parse("schema", format!("unsupported schema version {}", raw.schema)));
        }
        let n = raw.n;
        let mut prev = complete(n);
        let mut steps = Vec::with_capacity(raw.steps.len());
        for (i, s) in raw.steps.into_iter().enumerate() {
            let (partition, order) = Partition::new_with_order(n, s.blocks)?;
            let restraint = match (raw.compact, s.restraint, s.removed) {
                (false, Some(pairs), None) => Graph::new(n, pairs)?,
                (true, None, Some(removed)) => {
                    let gone = Graph::new(n, removed)?;
                    Graph::new(n, prev.edges().filter(|&(u, v)| !gone.has_edge(u, v)))?
                }
                _ => {
                    return Err(Error::parse(
                        format!("step {i}"),
                        "expected `restraint` (full form) or `removed` (compact form)",
                    ))
                }
            };
            let flips = FlipSpec::from(s.flips);
            flips.check(&partition)?;
            prev = restraint.clone();
            steps.push(Step { partition, restraint, flips: flips.remap(&order) });
        }
        Ok(RestrainedFlipSequence { n, steps })
    }
}

impl Serialize for RestrainedFlipSequence {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let raw: serde_json::Value =
            serde_json::from_str(&self.to_json(false).map_err(serde::ser::Error::custom)?).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RestrainedFlipSequence {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        RawSequence::deserialize(deserializer)?.try_into().map_err(serde::de::Error::custom)
    }
}

/// The first broken condition of the definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ViolationKind {
    #[error("sequence has no steps")]
    Empty,
    #[error("step covers {got} vertices, graph has {expected}")]
    WrongSize { expected: usize, got: usize },
    #[error("flip spec does not fit the partition: {message}")]
    BadFlip { message: String },
    #[error("first partition is not the one-block partition")]
    FirstNotWhole,
    #[error("last partition is not the partition into singletons")]
    LastNotSingletons,
    #[error("partition does not refine the previous one")]
    NotRefining,
    #[error("first restraint is not the set of all pairs")]
    FirstRestraintNotAll,
    #[error("last restraint is not empty")]
    LastRestraintNotEmpty,
    #[error("restraint gains the pair ({u}, {v})")]
    RestraintGrows { u: usize, v: usize },
    #[error("edge ({u}, {v}) of the flipped graph is outside the restraint")]
    EdgeOutsideRestraint { u: usize, v: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Zero-based step index.
    pub step: usize,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn into_result(self) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some(v) => Err(Error::InvalidSequence { step: v.step, reason: v.kind.to_string() }),
        }
    }
}

fn first_violation(g: &Graph, seq: &RestrainedFlipSequence) -> Option<Violation> {
    let n = g.n();
    let last = seq.steps.len().checked_sub(1);
    let Some(last) = last else {
        return Some(Violation { step: 0, kind: ViolationKind::Empty });
    };
    for (i, step) in seq.steps.iter().enumerate() {
        let fail = |kind| Some(Violation { step: i, kind });
        for got in [seq.n, step.partition.n(), step.restraint.n()] {
            if got != n {
                return fail(ViolationKind::WrongSize { expected: n, got });
            }
        }
        if let Err(e) = step.flips.check(&step.partition) {
            return fail(ViolationKind::BadFlip { message: e.to_string() });
        }
        if i == 0 {
            if step.partition.len() > 1 {
                return fail(ViolationKind::FirstNotWhole);
            }
            if step.restraint.m() != n * n.saturating_sub(1) / 2 {
                return fail(ViolationKind::FirstRestraintNotAll);
            }
        } else {
            let prev = &seq.steps[i - 1];
            if !step.partition.refines(&prev.partition) {
                return fail(ViolationKind::NotRefining);
            }
            if let Some((u, v)) = step.restraint.edges().find(|&(u, v)| !prev.restraint.has_edge(u, v)) {
                return fail(ViolationKind::RestraintGrows { u, v });
            }
        }
        if i == last {
            if !step.partition.is_singletons() {
                return fail(ViolationKind::LastNotSingletons);
            }
            if step.restraint.m() != 0 {
                return fail(ViolationKind::LastRestraintNotEmpty);
            }
        }
        let gi = apply_pflip(g, &step.partition, &step.flips).expect("sizes and flips checked above");
        let outside = gi.edges().find(|&(u, v)| !step.restraint.has_edge(u, v));
        if let Some((u, v)) = outside {
            return fail(ViolationKind::EdgeOutsideRestraint { u, v });
        }
    }
    None
}

/// Checks every condition of the definition, reporting the first failure.
pub fn validate_rfs(g: &Graph, seq: &RestrainedFlipSequence) -> ValidationReport {
    let violation = first_violation(g, seq);
    ValidationReport { valid: violation.is_none(), violation }
}

/// Largest number of blocks of `p` within distance `r` of a single vertex
/// in the graph `(V, R)`, with the vertex attaining it.
pub fn radius_width(p: &Partition, restraint: &Graph, r: Radius) -> Result<(usize, Option<usize>)> {
    if p.n() != restraint.n() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, restraint graph has {}",
            p.n(),
            restraint.n()
        )));
    }
    let mut best = (0, None);
    let mut seen = vec![usize::MAX; p.len()];
    for v in restraint.vertices() {
        let mut count = 0;
        for u in restraint.ball(v, r)?.iter() {
            let b = p.block_of(u);
            if seen[b] != v {
                seen[b] = v;
                count += 1;
            }
        }
        if count > best.0 {
            best = (count, Some(v));
        }
    }
    Ok(best)
}

/// Radius-`r` width of a valid sequence: the largest width of
/// `(P_{i+1}, R_i)`; 1 for a one-step sequence.
pub fn rfs_width(g: &Graph, seq: &RestrainedFlipSequence, r: Radius) -> Result<usize> {
    validate_rfs(g, seq).into_result()?;
    width_unchecked(seq, r)
}

pub(crate) fn width_unchecked(seq: &RestrainedFlipSequence, r: Radius) -> Result<usize> {
    let mut width = 1;
    for pair in seq.steps.windows(2) {
        width = width.max(radius_width(&pair[1].partition, &pair[0].restraint, r)?.0);
    }
    Ok(width)
}
