use thiserror::Error;

use crate::hgraph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge:?} has {found} distinct vertices, expected {expected}")]
    NonUniformEdge {
        edge: Vec<VertexId>,
        expected: usize,
        found: usize,
    },
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<VertexId>),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("edge index {index} out of range for {m} edges")]
    BadEdgeIndex { index: usize, m: usize },
    #[error("edge {0:?} is not an edge of the hypergraph")]
    EdgeNotInGraph(Vec<VertexId>),
    #[error("hypergraph has no vertices")]
    EmptyVertexSet,
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("hypergraph is not connected")]
    NotConnected,
    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("expected a 2-graph, got a {0}-graph")]
    NotAGraph(usize),
    #[error("edge move would create the multiple edge {0:?}")]
    MultipleEdgeCreated(Vec<VertexId>),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("star join produced the duplicate edge {0:?}")]
    DuplicateEdgeAfterJoin(Vec<VertexId>),
    #[error("walk enumeration exceeded the cap of {0} walks")]
    CapExceeded(usize),
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("power iteration did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("sign of the difference at the largest root could not be decided: {0}")]
    UndecidedAtBoundary(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// Stable machine-readable tag used in JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonUniformEdge { .. } => "NonUniformEdge",
            Error::DuplicateEdge(_) => "DuplicateEdge",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::BadEdgeIndex { .. } => "BadEdgeIndex",
            Error::EdgeNotInGraph(_) => "EdgeNotInGraph",
            Error::EmptyVertexSet => "EmptyVertexSet",
            Error::NoEdges => "NoEdges",
            Error::NotConnected => "NotConnected",
            Error::SizeLimitExceeded(_) => "SizeLimitExceeded",
            Error::BadParams(_) => "BadParams",
            Error::NotAGraph(_) => "NotAGraph",
            Error::MultipleEdgeCreated(_) => "MultipleEdgeCreated",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::DuplicateEdgeAfterJoin(_) => "DuplicateEdgeAfterJoin",
            Error::CapExceeded(_) => "CapExceeded",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NoConvergence(_) => "NoConvergence",
            Error::UndecidedAtBoundary(_) => "UndecidedAtBoundary",
            Error::Parse { .. } => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
