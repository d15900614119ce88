//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("invalid construction: {0}")]
    InvalidConstruction(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph on {needed} vertices exceeds the vertex cap of {cap}")]
    CapExceeded { needed: usize, cap: usize },

    #[error("expected {expected} factor graphs, got {got}")]
    OrderMismatch { expected: usize, got: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("graph must be connected")]
    Disconnected,

    #[error("family shape violation: {0}")]
    ShapeViolation(String),

    #[error("oracle refuses graphs on {n} vertices (cap {cap})")]
    OracleCap { n: usize, cap: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
