//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: malformed: {msg}")]
    Malformed { line: usize, msg: String },

    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },

    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: vertex {v} out of range (n = {n})")]
    VertexOutOfRange { line: usize, v: usize, n: usize },

    #[error("graph is disconnected: no path between {u} and {v}")]
    Disconnected { u: usize, v: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("line {line}: clause has {width} literals, expected exactly 3")]
    ClauseWidth { line: usize, width: usize },

    #[error("line {line}: variable {var} repeated within a clause")]
    RepeatedVariable { line: usize, var: usize },

    #[error("line {line}: clause contains both {var} and its negation")]
    TautologicalPair { line: usize, var: usize },

    #[error("line {line}: literal {lit} out of range (variables 1..={n})")]
    LiteralOutOfRange { line: usize, lit: i64, n: usize },

    #[error("broadcast is not an efficient dominating broadcast: {0}")]
    NotEfficientDominating(String),
}
