use thiserror::Error;

use crate::graph::{ArcId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid order k = {0}")]
    InvalidOrder(usize),
    #[error("alphabet of size {actual} is too small (need at least {required})")]
    AlphabetTooSmall { required: usize, actual: usize },
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("operation requires an alphabet with a weighted subset")]
    MissingWeightedSubset,
    #[error("invalid language: {0}")]
    InvalidLanguage(String),
    #[error("language is empty")]
    EmptyLanguage,
    #[error("language words have mixed lengths ({0} and {1})")]
    MixedWordLengths(usize, usize),
    #[error("symbol {symbol} out of range for alphabet of size {sigma}")]
    SymbolOutOfRange { symbol: usize, sigma: usize },
    #[error("unknown token {0:?}")]
    UnknownToken(String),

    #[error("graph has no arcs")]
    EmptyGraph,
    #[error("vertex {vertex} has in-degree {in_degree} but out-degree {out_degree}")]
    DegreeMismatch {
        vertex: VertexId,
        in_degree: usize,
        out_degree: usize,
    },
    #[error("arc-induced subgraph is not strongly connected")]
    NotConnected,
    #[error("graph carries no word labels")]
    NoWordLabels,
    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),
    #[error("transition system decomposes into {0} cycles")]
    MultipleCycles(usize),
    #[error("vertex {vertex} has degree {degree}; rewiring needs degree at least 3")]
    InsufficientDegree { vertex: VertexId, degree: usize },
    #[error("{forbidden} forbidden circuits exceed the limit {limit} at this vertex")]
    TooManyForbidden { forbidden: usize, limit: usize },
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("wiring at vertex {vertex} is not a perfect matching")]
    IncompleteWiring { vertex: VertexId },
    #[error("arc {0} does not exist")]
    NoSuchArc(ArcId),

    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("index {index} out of range (have {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("closed walks do not share vertices")]
    Disconnected,
    #[error("walk lengths {0} and {1} are not coprime")]
    NotCoprime(usize, usize),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
    #[error("instance-size guard exceeded ({guard})")]
    GuardExceeded { guard: u64 },
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("output error: {0}")]
    Output(String),
}
