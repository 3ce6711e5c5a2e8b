use thiserror::Error;

/// Errors produced by the polynomial engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("format error: {0}")]
    Format(String),

    #[error("expected {expected} gadgets, got {actual}")]
    Arity { expected: usize, actual: usize },

    #[error("family {family} is undefined for parameters {params}")]
    FamilyDomain { family: String, params: String },

    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,

    #[error("graph order {n} exceeds the cap of {cap} for {what}")]
    TooLarge {
        n: usize,
        cap: usize,
        what: &'static str,
    },

    #[error("binary string must have at least two symbols")]
    TooShort,

    #[error("binary string must end in a 1-block")]
    NotConnectedForm,

    #[error("gadget {index}: {reason}")]
    HypothesisNotMet { index: usize, reason: String },

    #[error("root finder did not converge after {iterations} iterations")]
    NumericFailure { iterations: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("ingest failed: {0}")]
    Ingest(String),

    #[error("catalog is missing order {0}")]
    IncompleteCatalog(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
