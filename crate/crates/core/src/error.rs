use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("edge {edge} references vertex {vertex} but the graph has {num_vertices} vertices")]
    VertexOutOfRange { edge: usize, vertex: usize, num_vertices: usize },

    #[error("vector length {got} does not match edge count {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("graph is disconnected: its connected-subgraph polynomial is identically zero")]
    Disconnected,

    #[error("capability exceeded: {0}")]
    CapabilityExceeded(String),

    #[error("graph is not series-parallel")]
    NotSeriesParallel,

    #[error("zero edge weight in series reduction")]
    ZeroWeight,

    #[error("reciprocal weight sum vanishes; effective series weight is undefined")]
    VanishingReciprocalSum,

    #[error("pole: {0}")]
    Pole(String),

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("root iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize, partial: Vec<(f64, f64)> },

    #[error("disc membership undecidable at {bits} bits: a root lies within its error radius of the boundary")]
    Undecidable { bits: u32 },

    #[error("no violation region: the indicator never changes sign")]
    NoViolationRegion,

    #[error("branch tracking lost: {0}")]
    BranchLost(String),

    #[error("branch exponent fit ambiguous: {0}")]
    AmbiguousExponent(String),

    #[error("no k <= {k_max} puts the branch point inside the disc")]
    NoSuitableK { k_max: u32 },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
