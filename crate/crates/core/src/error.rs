use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input values that cannot be interpreted together, e.g. labels over
    /// different ground sets.
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid size composition: {0}")]
    Composition(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },

    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("no eligible sample after {0} attempts")]
    RetryExhausted(usize),

    /// The graph has a component of order at most two (or no vertices).
    #[error("graph is not eligible: {0}")]
    Ineligible(String),

    #[error("vertex set does not induce a tree")]
    NotATree,

    #[error("tree is not a 1-star")]
    NotOneStar,

    #[error("star of length {star} does not match 1-star of order {order}")]
    LengthMismatch { star: usize, order: usize },

    #[error("sequence is not a star")]
    NotAStar,

    #[error("edge {0} {1} has no label")]
    MissingEdge(usize, usize),

    #[error("search budget exhausted")]
    BudgetExceeded,

    /// Both candidate values of the index were refuted.
    #[error("no coloring with {0} colors: contradicts the upper bound")]
    BoundViolated(u32),

    /// A constructive step produced output failing its own postcondition.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
