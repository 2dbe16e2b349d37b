use crate::vset::VertexSet;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not an edge: ({0}, {1})")]
    NotAnEdge(usize, usize),
    #[error("not a face: {0}")]
    NotAFace(VertexSet),
    #[error("empty induced set")]
    EmptyInducedSet,
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("infeasible size: {what} has n = {n}, supported maximum is {max}")]
    Infeasible {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("not a pure resolution")]
    NotPure,
    #[error("universal vertices: remove first ({0})")]
    UniversalVertices(VertexSet),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("parse error at line {line}: {msg}")]
    ParseLine { line: usize, msg: String },
    #[error("unknown suite '{0}'; available: {1}")]
    UnknownSuite(String, String),
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("pd undefined by this formula, table is trivial")]
    PdUndefined,
}

pub type Result<T> = std::result::Result<T, Error>;
