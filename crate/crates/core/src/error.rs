use std::path::PathBuf;

use thiserror::Error;

use crate::graph::VertexId;

/// Errors raised while building or loading a [`PropertyGraph`](crate::PropertyGraph).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate directed edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge endpoint {vertex} out of range for a graph with {vertex_count} vertices")]
    EndpointOutOfRange { vertex: VertexId, vertex_count: usize },
    #[error("self-loop on vertex {0} is not allowed in a pattern graph")]
    SelfLoop(VertexId),
    #[error("{what} has {got} attribute sets but the graph has {expected} elements")]
    AttributeCountMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("graph has {0} vertices, more than the supported 2^32 - 1")]
    TooManyVertices(usize),
}

/// Errors from the edge-list reader and writer.
#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("attribute {key:?}={value:?} cannot be written in edge-list format")]
    Unwritable { key: String, value: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("search state needs a non-empty pattern and target (got |V1|={pattern}, |V2|={target})")]
    InvalidSize { pattern: usize, target: usize },
    #[error("target vertex {0} is already mapped")]
    TargetAlreadyUsed(VertexId),
    #[error("pattern vertex {got} cannot be mapped at depth {expected}")]
    OutOfOrder { expected: usize, got: VertexId },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchError {
    #[error("pattern graph is empty")]
    EmptyPattern,
    #[error(
        "pattern needs at least 2 vertices and 1 edge to seed the search (got {vertices} vertices, {edges} edges)"
    )]
    PatternTooSmall { vertices: usize, edges: usize },
    #[error("pattern vertex {0} has a self-loop; self-loops are only supported in target graphs")]
    PatternSelfLoop(VertexId),
    #[error(
        "pattern has no edge (0, 1) to seed the search; enable reordering or relabel the pattern"
    )]
    MissingSeedEdge,
    #[error("target graph is empty")]
    EmptyTarget,
    #[error("worker count must be at least 1")]
    InvalidWorkerCount,
    #[error("match limit must be at least 1")]
    InvalidLimit,
    #[error("oracle refuses target with {vertices} vertices (cap is {cap})")]
    InstanceTooLarge { vertices: usize, cap: usize },
    #[error("engine emitted an embedding that fails verification: {0:?}")]
    UnsoundEmbedding(Vec<VertexId>),
    #[error("failed to start worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Error, PartialEq)]
pub enum GenerateError {
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
}

impl GenerateError {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Self::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
