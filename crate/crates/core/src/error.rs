use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("vertex {vertex} has degree {degree}, expected at most 3")]
    DegreeViolation { vertex: usize, degree: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, above the configured cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("corpus does not fit claim: {0}")]
    CorpusMismatch(String),
    #[error("line {line}: {message}")]
    Ingest { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("byte {byte} at offset {offset} is outside 63..=126")]
    ByteRange { byte: u8, offset: usize },
    #[error("empty input")]
    Empty,
    #[error("malformed size field")]
    MalformedSize,
    #[error("bit field truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} trailing bytes after bit field")]
    Trailing(usize),
    #[error("nonzero padding bits")]
    Padding,
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
