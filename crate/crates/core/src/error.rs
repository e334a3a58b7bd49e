use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("not girth 4 (girth {0:?})")]
    NotGirth4(Option<usize>),
    #[error("odd vertex count {0}: no cubic graph exists")]
    OddOrder(usize),
    #[error("order {n} outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("incomplete assignment: {0}")]
    Incomplete(String),
    #[error("malformed rotation: {0}")]
    MalformedRotation(String),
    #[error("map is disconnected")]
    Disconnected,
    #[error("cutout: {0}")]
    Cutout(String),
    #[error("not simple: {0}")]
    NotSimple(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid alternating path: {0}")]
    InvalidPath(String),
    #[error("document: {0}")]
    Document(String),
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("step {index} ({op}): {message}")]
    Step { index: usize, op: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
