use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("duplicate edge {0}")]
    DuplicateEdge(String),
    #[error("unknown vertex {0}")]
    MissingVertex(String),
    #[error("no edge between {0} and {1}")]
    MissingEdge(String, String),
    #[error("parent edge {{{0},{1}}} does not exist")]
    MissingParentEdge(String, String),
    #[error("graph needs at least two vertices")]
    TooFewVertices,
    #[error("graph has no Henneberg I' deconstruction from the given base")]
    NotTypeIPrime,
    #[error("residue order must be positive")]
    NonpositiveOrder,
    #[error("truncation order {requested} exceeds the limit {limit}")]
    TruncationTooLarge { requested: u32, limit: u32 },
    #[error("{requested} vertices exceed the limit {limit}")]
    TooManyVertices { requested: usize, limit: usize },
    #[error("invalid weight for edge {edge}: {reason}")]
    InvalidWeight { edge: String, reason: String },
    #[error("move {index}: {source}")]
    Move { index: usize, source: Box<Error> },
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
