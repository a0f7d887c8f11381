use crate::error::Result;
use crate::graph::{Graph, Partition, VertexSet};
use crate::mergewidth::{validate_rfs, RestrainedFlipSequence, Step};

/// True when the sequence has one step per vertex and every step splits
/// exactly one block in two.
pub fn is_normalized(seq: &RestrainedFlipSequence) -> bool {
    seq.steps.len() == seq.n.max(1) && seq.steps.windows(2).all(|w| w[1].partition.len() == w[0].partition.len() + 1)
}

/// Rewrites a valid sequence so that consecutive partitions differ by a
/// single split.
///
/// Repeated partitions are dropped left to right, keeping the later copy
/// except at the start, where the first step must keep the full restraint.
/// Gaps are filled by splitting the leftmost block of `P_i` that `P_{i+1}`
/// splits, cutting off the part of `P_{i+1}` that holds the block's smallest
/// vertex; the inserted step reuses `R_i` and `G_i`.
pub fn normalize_rfs(g: &Graph, seq: &RestrainedFlipSequence) -> Result<RestrainedFlipSequence> {
    validate_rfs(g, seq).into_result()?;
    let mut distinct: Vec<Step> = Vec::with_capacity(seq.steps.len());
    for step in &seq.steps {
        match distinct.last_mut() {
            Some(last) if last.partition == step.partition => {
                if distinct.len() > 1 {
                    *distinct.last_mut().unwrap() = step.clone();
                }
            }
            _ => distinct.push(step.clone()),
        }
    }

    let mut steps = Vec::with_capacity(seq.n.max(1));
    for (i, step) in distinct.iter().enumerate() {
        steps.push(step.clone());
        let Some(next) = distinct.get(i + 1) else { break };
        let mut cur = step.partition.clone();
        while cur.len() + 1 < next.partition.len() {
            let refined = split_once(&cur, &next.partition);
            let flips = step.flips.lift(&step.partition, &refined);
            steps.push(Step { partition: refined.clone(), restraint: step.restraint.clone(), flips });
            cur = refined;
        }
    }
    Ok(RestrainedFlipSequence { n: seq.n, steps })
}

/// One split of `coarse` towards its strict refinement `fine`.
fn split_once(coarse: &Partition, fine: &Partition) -> Partition {
    let parent = fine.parent_map(coarse);
    let block = (0..coarse.len())
        .find(|&b| parent.iter().filter(|&&p| p == b).count() > 1)
        .expect("fine partition has more blocks");
    let smallest = coarse.block(block)[0];
    let part: VertexSet = fine.block(fine.block_of(smallest)).iter().copied().collect();
    coarse.split(block, &part).expect("sub-block is proper")
}
