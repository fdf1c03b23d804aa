use thiserror::Error;

use crate::Vertex;

/// Errors raised while building, parsing or querying a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("uniformity {r} with {n} vertices is invalid (need n >= r >= 2)")]
    InvalidUniformity { r: usize, n: usize },
    #[error("edge {index} has {found} vertices, expected {expected}")]
    EdgeArity {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge {index} repeats vertex {vertex}")]
    RepeatedVertexInEdge { index: usize, vertex: Vertex },
    #[error("edge {index} duplicates an earlier edge")]
    DuplicateEdge { index: usize },
    #[error("operation needs a 3-uniform hypergraph, got r = {r}")]
    NotPairUniform { r: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Parameter errors for the construction generators and closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("closed form is not integral: {0}")]
    NonIntegral(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// Errors from the exhaustive enumerator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("exhaustive enumeration supports 3 <= n <= 6, got n = {0}")]
    OrderTooLarge(usize),
    #[error("exhaustive enumeration needs at least 3 vertices, got n = {0}")]
    OrderTooSmall(usize),
}

/// Postcondition failures of the constructive finder's moves.
///
/// Each one means a move produced something its proof says it cannot, so it
/// is surfaced rather than retried.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinderError {
    #[error("invalid path: {0}")]
    InvalidPath(#[from] PathError),
    #[error("rotation postcondition failed: {0}")]
    RotationPostconditionFailed(String),
    #[error("codegree splice postcondition failed: {0}")]
    SplicePostconditionFailed(String),
    #[error("cycle unfold postcondition failed: {0}")]
    UnfoldPostconditionFailed(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// Structural problems with a vertex sequence claimed to be a linear path,
/// cycle or cycle-plus witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("sequence of {0} vertices does not encode a linear structure")]
    BadLength(usize),
    #[error("vertex {0} (0-based) appears twice")]
    RepeatedVertex(Vertex),
    #[error("vertex {0} (0-based) is out of range")]
    VertexOutOfRange(Vertex),
    #[error("{{{}, {}, {}}} (0-based) is not an edge", .0[0], .0[1], .0[2])]
    MissingEdge([Vertex; 3]),
    #[error("host hypergraph is not 3-uniform")]
    NotPairUniform,
}

/// Errors from the verification harness.
#[derive(Debug, Error)]
pub enum LabError {
    #[error("minimum degree {delta} is infeasible on {n} vertices (max {max})")]
    InfeasibleDegree { n: usize, delta: usize, max: usize },
    #[error("oracle budget exhausted: {0}")]
    OracleBudget(String),
    #[error("invalid experiment configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Finder(#[from] FinderError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
