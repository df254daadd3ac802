use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge `{0}`")]
    DuplicateEdge(String),
    #[error("edge `{0}` has fewer than two vertices")]
    Arity(String),
    #[error("edge `{0}` is a loop (repeated vertex)")]
    Loop(String),
    #[error("identifier collision on `{0}`")]
    Collision(String),
    #[error("hypergraph is not connected")]
    Disconnected,
    #[error("hypergraph is empty")]
    Empty,
    #[error("vertex `{vertex}` has {found} values, expected {expected}")]
    Ragged {
        vertex: String,
        found: usize,
        expected: usize,
    },
    #[error("precondition violated at vertex `{vertex}`: {reason}")]
    Precondition { vertex: String, reason: String },
    #[error("size guard exceeded: {0}")]
    TooLarge(String),
    #[error("excluded shape: {0}")]
    ExcludedShape(String),
    #[error("not a block: {0}")]
    NotABlock(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
