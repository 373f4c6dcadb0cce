use crate::graph::{EdgeId, Vertex};

/// Errors raised by graph construction, searches and checkers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("loop at vertex {0} rejected: graphs are loopless")]
    LoopRejected(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("unknown edge id {0}")]
    UnknownEdgeId(EdgeId),
    #[error("power exponent must be at least 1")]
    InvalidK,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("endpoints must be distinct vertices (got {0} twice)")]
    SameVertex(Vertex),
    #[error("graph has no cycle")]
    Acyclic,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph has {0} vertices, a hamiltonian cycle needs at least 3")]
    TooSmall(usize),
    #[error("graph has {n} vertices, search supports at most {max}")]
    TooLarge { n: usize, max: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("malformed record at line {line}: {reason}")]
    MalformedRecord { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
