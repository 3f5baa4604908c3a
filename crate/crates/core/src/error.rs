use crate::graph::Node;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("node {node} out of range for a graph on {n} nodes")]
    NodeOutOfRange { node: Node, n: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(Node),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Node, Node),
    #[error("graph text parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph has no nodes")]
    NoNodes,
    #[error("root set is empty")]
    EmptyRoots,
    #[error("source set is empty")]
    EmptySourceSet,
    #[error("graph is not connected")]
    Disconnected,
    #[error("node {0} is unreachable from the given roots")]
    Unreachable(Node),
    #[error("simulation exceeded the round cap of {cap} rounds")]
    RoundCapExceeded { cap: usize },
    #[error("k={k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("exact search on {n} nodes exceeds the limit of {limit} (use force to override, hard cap 64)")]
    SearchTooLarge { n: usize, limit: usize },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("n={n} out of supported range {min}..={max}")]
    NOutOfRange { n: usize, min: usize, max: usize },
    #[error("edge probability {0} out of range (0, 1]")]
    InvalidProbability(f64),
    #[error("failed to sample a connected graph within {0} attempts")]
    RetriesExhausted(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
