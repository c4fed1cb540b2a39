use thiserror::Error;

use crate::grid::Point;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty collection")]
    EmptyCollection,

    #[error("degenerate interval")]
    DegenerateInterval,

    #[error("not a cycle")]
    NotACycle,

    #[error("not liftable: required intersection {0} is not a vertex of the collection")]
    NotLiftable(Point),

    #[error("dangling vertex {0}")]
    DanglingVertex(Point),

    #[error("marked vertex not in collection: {0}")]
    MarkedVertexNotInCollection(Point),

    #[error("unknown variable {0}")]
    UnknownVariable(String),

    #[error("degree bound too large: {candidates} candidate monomials exceed cap {cap}")]
    DegreeBoundTooLarge { candidates: usize, cap: usize },

    #[error("not a polyomino: collection has {components} edge-connected components")]
    NotAPolyomino { components: usize },

    #[error("unsupported orientation for marked-set recipe")]
    UnsupportedOrientation,

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown overlay: {0}")]
    UnknownOverlay(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
