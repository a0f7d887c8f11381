use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// A partition of `{0, .., n-1}` into nonempty blocks.
///
/// Blocks are kept in canonical form: each block sorted ascending, blocks
/// ordered by their smallest vertex. Block indices used by [`FlipSpec`]
/// refer to this order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    #[serde(skip)]
    block_of: Vec<usize>,
}

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.blocks)
    }
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Partition> {
        Ok(Partition::new_with_order(n, blocks)?.0)
    }

    /// Like [`Partition::new`], also returning where each input block ended
    /// up in canonical order.
    pub fn new_with_order(n: usize, blocks: Vec<Vec<usize>>) -> Result<(Partition, Vec<usize>)> {
        let mut block_of = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        let mut indexed: Vec<(usize, Vec<usize>)> = blocks
            .into_iter()
            .enumerate()
            .map(|(i, mut b)| {
                b.sort_unstable();
                (i, b)
            })
            .collect();
        indexed.sort_by_key(|(_, b)| b[0]);
        let mut position = vec![0; indexed.len()];
        for (new, (old, _)) in indexed.iter().enumerate() {
            position[*old] = new;
        }
        let blocks: Vec<Vec<usize>> = indexed.into_iter().map(|(_, b)| b).collect();
        Ok((Partition::from_canonical(n, blocks), position))
    }

    fn from_canonical(n: usize, blocks: Vec<Vec<usize>>) -> Partition {
        let mut block_of = vec![0; n];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                block_of[v] = i;
            }
        }
        Partition { blocks, block_of }
    }

    /// Groups vertices by a key, blocks in canonical order.
    pub fn from_labels<K: Ord + Clone>(labels: &[K]) -> Partition {
        let mut groups: std::collections::BTreeMap<K, Vec<usize>> = Default::default();
        for (v, k) in labels.iter().enumerate() {
            groups.entry(k.clone()).or_default().push(v);
        }
        let mut blocks: Vec<Vec<usize>> = groups.into_values().collect();
        blocks.sort_by_key(|b| b[0]);
        Partition::from_canonical(labels.len(), blocks)
    }

    /// The one-block partition (no blocks when `n == 0`).
    pub fn whole(n: usize) -> Partition {
        let blocks = if n == 0 { vec![] } else { vec![(0..n).collect()] };
        Partition::from_canonical(n, blocks)
    }

    pub fn singletons(n: usize) -> Partition {
        Partition::from_canonical(n, (0..n).map(|v| vec![v]).collect())
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn block_set(&self, i: usize) -> VertexSet {
        self.blocks[i].iter().copied().collect()
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.len() == self.n()
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.n() == coarser.n()
            && self.blocks.iter().all(|b| {
                let target = coarser.block_of(b[0]);
                b.iter().all(|&v| coarser.block_of(v) == target)
            })
    }

    /// For a refinement `self` of `coarser`: the coarse block containing each block of `self`.
    pub fn parent_map(&self, coarser: &Partition) -> Vec<usize> {
        self.blocks.iter().map(|b| coarser.block_of(b[0])).collect()
    }

    /// Coarsest common refinement.
    pub fn common_refinement(&self, other: &Partition) -> Partition {
        let labels: Vec<(usize, usize)> = (0..self.n()).map(|v| (self.block_of(v), other.block_of(v))).collect();
        Partition::from_labels(&labels)
    }

    /// The partition induced on `keep` (renumbered ascending), plus for each
    /// block of `self` its index in the result, if it meets `keep`.
    pub fn restrict(&self, keep: &VertexSet) -> (Partition, Vec<Option<usize>>) {
        let order = keep.to_vec();
        let labels: Vec<usize> = order.iter().map(|&v| self.block_of(v)).collect();
        let restricted = Partition::from_labels(&labels);
        let mut map = vec![None; self.len()];
        for (new_v, &old_v) in order.iter().enumerate() {
            map[self.block_of(old_v)] = Some(restricted.block_of(new_v));
        }
        (restricted, map)
    }

    /// Splits the block containing `block[0]` into `part` and the rest.
    pub fn split(&self, block: usize, part: &VertexSet) -> Result<Partition> {
        let (inside, outside): (Vec<usize>, Vec<usize>) =
            self.blocks[block].iter().partition(|&&v| part.contains(v));
        if inside.is_empty() || outside.is_empty() {
            return Err(Error::InvalidPartition("split must produce two nonempty blocks".into()));
        }
        let mut blocks = self.blocks.clone();
        blocks[block] = inside;
        blocks.push(outside);
        Partition::new(self.n(), blocks)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(deserializer)?;
        let n = blocks.iter().map(Vec::len).sum();
        Partition::new(n, blocks).map_err(serde::de::Error::custom)
    }
}

/// The set of flipped block pairs `(i, j)`, stored with `i <= j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<(usize, usize)>", into = "Vec<(usize, usize)>")]
pub struct FlipSpec(BTreeSet<(usize, usize)>);

impl From<Vec<(usize, usize)>> for FlipSpec {
    fn from(pairs: Vec<(usize, usize)>) -> Self {
        pairs.into_iter().collect()
    }
}

impl From<FlipSpec> for Vec<(usize, usize)> {
    fn from(spec: FlipSpec) -> Self {
        spec.0.into_iter().collect()
    }
}

impl FromIterator<(usize, usize)> for FlipSpec {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut spec = FlipSpec::default();
        for (i, j) in iter {
            spec.insert(i, j);
        }
        spec
    }
}

impl FlipSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, i: usize, j: usize) -> bool {
        self.0.insert((i.min(j), i.max(j)))
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.0.contains(&(i.min(j), i.max(j)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn check(&self, partition: &Partition) -> Result<()> {
        match self.0.iter().map(|&(_, j)| j).find(|&j| j >= partition.len()) {
            Some(index) => Err(Error::BlockOutOfRange { index, blocks: partition.len() }),
            None => Ok(()),
        }
    }

    /// Re-indexes blocks through `map` (old index -> new index).
    pub fn remap(&self, map: &[usize]) -> FlipSpec {
        self.pairs().map(|(i, j)| (map[i], map[j])).collect()
    }

    /// The same flip expressed over a refinement `fine` of `coarse`: two fine
    /// blocks are flipped iff their parents are.
    pub fn lift(&self, coarse: &Partition, fine: &Partition) -> FlipSpec {
        let parent = fine.parent_map(coarse);
        let k = fine.len();
        let mut out = FlipSpec::new();
        for a in 0..k {
            for b in a..k {
                if self.contains(parent[a], parent[b]) {
                    out.insert(a, b);
                }
            }
        }
        out
    }

    /// Symmetric difference of flipped pairs.
    pub fn xor(&self, other: &FlipSpec) -> FlipSpec {
        FlipSpec(self.0.symmetric_difference(&other.0).copied().collect())
    }
}
