use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph contains a cycle")]
    NotATree,

    #[error("not a plumbing of a definite tree")]
    NotDefinite,

    #[error("canonical cycle is not integral (graph is not numerically Gorenstein)")]
    NotGorenstein,

    #[error("lattice box has {states} points, state budget is {budget}")]
    BoxTooLarge { states: u128, budget: u64 },

    #[error("cycle has {got} entries, graph has {expected} vertices")]
    IndexMismatch { expected: usize, got: usize },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("newton diagram: {0}")]
    Diagram(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("computation sequence did not terminate after {0} steps")]
    NonTermination(u64),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
