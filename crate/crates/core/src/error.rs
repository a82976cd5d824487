use thiserror::Error;

use crate::graph::{Edge, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex labels must be positive")]
    ZeroLabel,
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("edge ({0}, {1}) is not written with the smaller label first")]
    UnsortedPair(VertexId, VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("edge {0} already present")]
    DuplicateEdge(Edge),
    #[error("edge {0} not present")]
    MissingEdge(Edge),
    #[error("graph needs at least {needed} vertices, has {found}")]
    TooFewVertices { needed: usize, found: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not Laman")]
    NotLaman,
    #[error("graph is not a rigidity circuit")]
    NotCircuit,
    #[error("graph is not a 3-connected circuit")]
    NotThreeConnectedCircuit,
    #[error("graph is not a 2-connected (and not 3-connected) circuit")]
    NotTwoConnectedCircuit,
    #[error("{0}")]
    Precondition(String),
}

/// Parse failure in one of the text or JSON formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("json: {0}")]
    Json(String),
    #[error("binary polynomial cache: {0}")]
    Binary(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),
    #[error("variable x{0} does not occur in {1}")]
    VariableAbsent(crate::poly::DistVar, &'static str),
    #[error("a polynomial may use at most {max} distinct variables, {found} requested")]
    TooManyVariables { max: usize, found: usize },
    #[error("exponent overflow: degree above {0} in a single variable")]
    ExponentOverflow(u32),
    #[error("resource exhausted: {0}")]
    ResourceExhausted(crate::poly::Exhaustion),
    #[error("exact division failed: divisor does not divide dividend")]
    InexactDivision,
}
