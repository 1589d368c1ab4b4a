use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pair {{{0}, {1}}} carries both a positive and a negative edge")]
    ConflictingSign(usize, usize),
    #[error("an offensive alliance must be non-empty")]
    EmptySet,
    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph is not a balanced complete graph")]
    NotBalanced,
    #[error("graph is not an anti-balanced complete graph")]
    NotAntiBalanced,
    #[error("selection must meet at least two parts")]
    SinglePart,
    #[error("every selected part is fully contained in the selection")]
    DegenerateSelection,

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("decoded set failed verification: {0}")]
    VerificationFailed(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("vertex {0} is in no bag")]
    NotCover(usize),
    #[error("edge {{{0}, {1}}} is contained in no bag")]
    EdgeUncovered(usize, usize),
    #[error("bags containing vertex {0} are not connected in the tree")]
    NotConnectedTrace(usize),
    #[error("vertex {0} violates the domino property")]
    NotDomino(usize),
    #[error("decomposition tree is malformed: {0}")]
    MalformedTree(String),
    #[error("vertex {vertex} is not in bag {node}")]
    NotInBag { vertex: usize, node: usize },

    #[error("source graph has maximum degree {0} > 3")]
    DegreeTooHigh(usize),
    #[error("hyperedge {0} is empty")]
    EmptyHyperedge(usize),
    #[error("source solution is not valid: {0}")]
    InvalidSourceSolution(String),
    #[error("probabilities must satisfy 0 <= p_pos, p_neg and p_pos + p_neg <= 1")]
    BadProbabilities,
    #[error("invalid generator parameter: {0}")]
    BadParameter(String),

    #[error("strategy unavailable: {0}")]
    StrategyUnavailable(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
