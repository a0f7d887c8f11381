//! Flip sparsification and the width parameters around it, on small labeled
//! graphs.
//!
//! * [`graph`]: graphs, partitions, flips, balls, biclique detection, I/O.
//! * [`sparsify`]: the deletion set approximating every flip of a partition.
//! * [`widths`]: separators, strong/weak reachability, separation-width,
//!   degeneracy and an exact tree-width oracle.
//! * [`mergewidth`]: restrained flip sequences and the two witness
//!   conversions between separation-width orders and such sequences.
//! * [`games`]: the bounded-speed cops-and-robber game, the monotone cop
//!   strategy, and exact solvers for the cop and flipper games.
//! * [`ranks`]: flipper-rank and splitter-rank on tiny graphs.
//! * [`sweep`]: seeded corpus sweeps checking the structural bounds.

pub mod error;
pub mod games;
pub mod graph;
pub mod mergewidth;
pub mod radius;
pub mod ranks;
pub mod sparsify;
pub mod sweep;
pub mod widths;

#[doc(hidden)]
pub mod cli;

pub use error::{Error, Result};
pub use graph::{FlipSpec, Graph, Partition, VertexSet};
pub use radius::Radius;
