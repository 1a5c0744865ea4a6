use thiserror::Error;

/// Errors produced by graph construction, solvers, generators and IO.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invariant undefined for this graph: {0}")]
    UndefinedInvariant(String),

    #[error("graph order {n} exceeds the size guard {guard}")]
    SizeGuardExceeded { n: usize, guard: usize },

    #[error("the empty graph has no invariants")]
    EmptyGraph,

    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    #[error("graph is not a tree")]
    NotATree,

    /// `position` is a byte offset for graph6 input and a 1-based line
    /// number for edge-list input.
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown theorem check id: {0}")]
    UnknownTheorem(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
