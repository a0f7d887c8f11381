use thiserror::Error;

use crate::graph::Biclique;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("flip spec references block {index}, but the partition has {blocks} blocks")]
    BlockOutOfRange { index: usize, blocks: usize },

    #[error("{what}: size {got} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, got: usize, cap: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("graph contains K_{{{t},{t}}} as a subgraph: A={:?}, B={:?}", .witness.left, .witness.right)]
    NotKttFree { t: usize, witness: Biclique },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid restrained flip sequence at step {step}: {reason}")]
    InvalidSequence { step: usize, reason: String },

    #[error("bound violated: {0}")]
    BoundViolated(String),

    #[error("strategy failed: {0}")]
    Strategy(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }

    /// Exit code used by the command-line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 3,
            Error::BoundViolated(_) => 1,
            _ => 2,
        }
    }
}
