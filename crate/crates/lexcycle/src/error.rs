use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("ordering does not match the graph's vertex set")]
    VertexSetMismatch,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid modular partition: {0}")]
    InvalidPartition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Errors from the text formats (graph files, ordering files, matrix files).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: duplicate vertex `{name}`")]
    DuplicateVertex { line: usize, name: String },
    #[error("line {line}: self-loop on `{name}`")]
    SelfLoop { line: usize, name: String },
    #[error("line {line}: malformed line `{content}`")]
    MalformedLine { line: usize, content: String },
    #[error("`v` is reserved for vertex declarations and cannot name a vertex")]
    ReservedName,
    #[error("ordering mentions unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("ordering lists vertex `{0}` more than once")]
    DuplicateInOrdering(String),
    #[error("ordering is missing vertex `{0}`")]
    MissingFromOrdering(String),
    #[error("matrix: {0}")]
    Matrix(String),
}
