use thiserror::Error;

use crate::graph::Edge;

/// Errors raised by the library. Domain refusals (inputs outside an
/// operation's supported range) are distinguished from malformed input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("size limit exceeded: {what} is {actual}, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("refused: {0}")]
    Refused(String),

    #[error("degenerate drawing: vertex {vertex} lies on edge {edge}")]
    VertexOnEdge { vertex: usize, edge: Edge },

    #[error("degenerate drawing: vertices {0} and {1} share a position")]
    CoincidentVertices(usize, usize),

    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
