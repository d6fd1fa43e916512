use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, more than the supported maximum")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("character {found:?} at byte {position} is outside the graph6 range")]
    BadCharacter { position: usize, found: char },
    #[error("graph6 size {0} exceeds the supported maximum")]
    TooLarge(usize),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    BadLength { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HFreeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("split vertex {0} is isolated")]
    IsolatedSplitVertex(usize),
    #[error("U ∪ W differs from the neighbourhood of the split vertex")]
    SplitCover,
    #[error("graph is not free of the family")]
    NotFree,
    #[error("graph has an isolated vertex")]
    IsolatedVertex,
    #[error("vertex set does not induce the reference graph")]
    NotInduced,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("invalid parameter for {name}: {reason}")]
    InvalidParameter { name: String, reason: String },
    #[error("unknown figure {0:?}")]
    UnknownFigure(String),
    #[error("instance needs {0} vertices, more than the supported maximum")]
    BoundTooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("vertex bound {0} exceeds the enumeration limit")]
    BoundExceeded(usize),
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("cannot build worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
