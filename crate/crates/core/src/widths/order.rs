use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A total order on `{0, .., n-1}`, stored as the enumeration `v_1, .., v_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ordering {
    perm: Vec<usize>,
    pos: Vec<usize>,
}

impl Ordering {
    pub fn new(perm: Vec<usize>) -> Result<Ordering> {
        let n = perm.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in perm.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if pos[v] != usize::MAX {
                return Err(Error::Precondition(format!("vertex {v} appears twice in the ordering")));
            }
            pos[v] = i;
        }
        Ok(Ordering { perm, pos })
    }

    pub fn identity(n: usize) -> Ordering {
        Ordering { perm: (0..n).collect(), pos: (0..n).collect() }
    }

    pub fn reversed(&self) -> Ordering {
        Ordering::new(self.perm.iter().rev().copied().collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn vertex_at(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.perm.iter().copied()
    }

    /// Bitmask of the first `i` vertices.
    pub(crate) fn prefix_mask(&self, i: usize) -> u64 {
        self.perm[..i].iter().fold(0, |m, &v| m | 1 << v)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::Precondition(format!("ordering has {} vertices, graph has {n}", self.len())))
        }
    }
}

impl Serialize for Ordering {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.perm.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Ordering {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ordering::new(Vec::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}
