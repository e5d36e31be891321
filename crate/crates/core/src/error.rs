use std::fmt;

use thiserror::Error;

/// Location of a syntax problem in framework or tuple text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: Position, message: String },

    #[error("attack at {position} references undeclared argument `{name}`")]
    UndeclaredArgument { position: Position, name: String },

    #[error("invalid argument identifier `{0}`")]
    InvalidIdentifier(String),

    #[error("unknown argument `{0}`")]
    UnknownArgument(String),

    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),

    #[error("graph contains a cycle; use the cyclic evaluator")]
    CyclicGraph,

    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("no branch of length {length} can be removed from `{root}`")]
    MissingBranch { root: String, length: usize },

    #[error("changing a branch from length {from} to {to} flips its status; use remove + add")]
    ParityChange { from: usize, to: usize },

    #[error("invalid edit: {0}")]
    InvalidEdit(String),

    #[error("fixpoint iteration did not converge after {iterations} iterations (last change {delta:e})")]
    NonConvergence { iterations: usize, delta: f64 },

    #[error("values of different kinds cannot be ordered together")]
    MixedValueKinds,

    #[error("instance `{instance}` cannot decide the graph: {reason}")]
    Undecidable { instance: String, reason: String },

    #[error("graph has {size} arguments; enumeration bound is {bound}")]
    EnumerationBound { size: usize, bound: usize },

    #[error("propagation depth must be at least 1")]
    InvalidDepth,

    #[error("invalid tupled value: {0}")]
    InvalidTupledValue(String),
}

pub type Result<T> = std::result::Result<T, Error>;
