use thiserror::Error;

use crate::coloring::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("distance undefined for equal vertices ({0})")]
    EqualVertices(Vertex),

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },

    #[error("vertex {0} is not active")]
    InactiveVertex(Vertex),

    #[error("degenerate edge ({0}, {0})")]
    DegenerateEdge(Vertex),

    #[error("duplicate flip ({0}, {1})")]
    DuplicateFlip(Vertex, Vertex),

    #[error("length {length} exceeds floor(n/2) = {max}")]
    LengthOutOfRange { length: usize, max: usize },

    #[error("order {0} is not supported (must be in 2..=64)")]
    UnsupportedOrder(usize),

    #[error("clique size {k} out of range (2..={active})")]
    CliqueSizeOutOfRange { k: usize, active: usize },

    #[error("empty vertex set")]
    EmptyVertexSet,

    #[error("edge ({0}, {1}) does not have the requested color")]
    WrongEdgeColor(Vertex, Vertex),

    #[error("index {index} out of range 0..{order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("coloring is not a pure circulant of odd order: {0}")]
    NotCirculant(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("lemma falsified: {0}")]
    Falsified(String),

    #[error("search budget must be at least 1")]
    ZeroBudget,

    #[error("objective drift at step {step}: tracked {tracked}, recounted {recounted}")]
    ObjectiveDrift { step: usize, tracked: u64, recounted: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
