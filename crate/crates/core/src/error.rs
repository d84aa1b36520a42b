use thiserror::Error;

/// Errors raised by the algebra and by the text parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a leaf")]
    NotALeaf(String),
    #[error("{0} is not a node")]
    NotANode(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid tree-pair diagram: {0}")]
    InvalidDiagram(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("index {index} out of range: {reason}")]
    OutOfRange { index: i64, reason: String },
    #[error("not bijective: {0}")]
    NotBijective(String),
    #[error("not quasi-tree-respecting: {0}")]
    NotQuasiTreeRespecting(String),
    #[error("not a member of {0}")]
    NotAMember(String),
    #[error("{0} is not stabilized")]
    NotStabilized(String),
    #[error("malformed tuple: {0}")]
    MalformedTuple(String),
    #[error("symbol {symbol} is not valid for {group}")]
    InvalidSymbol { symbol: char, group: String },
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
}

pub type Result<T> = std::result::Result<T, Error>;
