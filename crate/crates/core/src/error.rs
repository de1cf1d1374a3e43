use thiserror::Error;

/// Errors produced by graph construction, parsing and the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graphs are limited to {max} vertices, got {order}")]
    TooManyVertices { order: usize, max: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid family spec: {0}")]
    InvalidFamily(String),
    #[error("order {n} out of range: {reason}")]
    OrderOutOfRange { n: usize, reason: String },
    #[error("no {0} graphs of the requested order")]
    EmptyClass(String),
}

pub type Result<T> = std::result::Result<T, Error>;
