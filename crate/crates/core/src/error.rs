use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{what}: size {actual} exceeds the limit {limit}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("not a partition of the vertex set: {0}")]
    NotPartition(String),

    #[error("decomposition parity violation: |V| - components + |A| = {0} is odd")]
    ParityViolation(usize),

    #[error("color {color} out of range 1..={colors}")]
    ColorOutOfRange { color: usize, colors: usize },

    #[error("coloring uses {coloring} colors but parameters list {params}")]
    ColorCountMismatch { coloring: usize, params: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid color relabeling: {0}")]
    InvalidRelabel(String),

    #[error("no host edge joins part {0} and part {1}")]
    MissingCrossEdge(usize, usize),

    #[error("coloring is not free for the given parameters")]
    NotFree,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}
