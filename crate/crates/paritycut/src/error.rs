use thiserror::Error;

/// Errors shared by graph construction, recognition, the cut solvers, and I/O.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("labelling covers {found} vertices, graph has {expected}")]
    LabellingMismatch { expected: usize, found: usize },
    #[error("labels must be a bijection onto 1..=n: {0}")]
    InvalidLabelling(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("signed graph is not balanced")]
    Unbalanced,
    #[error("underlying graph is not a path or a cycle")]
    NotPathOrCycle,
    #[error("underlying graph is not a cycle")]
    NotACycle,
    #[error("underlying graph is not a path")]
    NotAPath,
    #[error("signed graph has positive edges")]
    NotAllNegative,
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("not a permutation of the {0} labels in use")]
    InvalidPermutation(&'static str),
    #[error("graph order {n} exceeds limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("signed graph is not a parity signed graph")]
    NotParitySigned,
    #[error("labelling does not induce the given signature")]
    LabellingNotWitness,
    #[error("no closed-form value for this family")]
    NoKnownFormula,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares {declared} edges, found {found}")]
    CountMismatch { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
