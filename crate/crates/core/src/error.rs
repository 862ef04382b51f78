use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("malformed graph6 string: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("terminal set is empty")]
    EmptyTerminals,
    #[error("subset size k must be at least 2, got {0}")]
    BadK(usize),
    #[error("invalid nested star spec: {0}")]
    BadSpec(String),
    #[error("arithmetic width exceeded: {0}")]
    InfeasibleWidth(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the residue table limit")]
    TooLargeModulus(u64),
    #[error("scan coverage incomplete: vertex counts {0:?} were not enumerated")]
    IncompleteCoverage(Vec<usize>),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
