//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    NoVertices,

    #[error("edge endpoint {vertex} out of range for {vertex_count} vertices")]
    EndpointOutOfRange { vertex: usize, vertex_count: usize },

    #[error("explicit self-loop ({0}, {0}) is not allowed")]
    SelfLoopEdge(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} has more than one incident edge set entry")]
    SharedEndpoint { vertex: usize },

    #[error("disjoint union of an empty graph list")]
    EmptyUnion,

    #[error("zero denominator in rational duration")]
    ZeroDenominator,

    #[error("duration must be non-negative and finite")]
    InvalidDuration,

    #[error("stage durations must be strictly positive")]
    NonPositiveDuration,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("vertex count mismatch: {left} vs {right}")]
    VertexCountMismatch { left: usize, right: usize },

    #[error("state norm {norm} deviates from 1 beyond tolerance")]
    NotNormalized { norm: f64 },

    #[error("eigensolver did not converge within {0} sweeps")]
    EigenFailure(usize),

    #[error("matrix is not unitary (defect {0:.3e})")]
    NotUnitary(f64),

    #[error("dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("qubit index {qubit} out of range for {qubit_count} qubits")]
    QubitOutOfRange { qubit: usize, qubit_count: usize },

    #[error("repeated qubit index {0}")]
    RepeatedQubit(usize),

    #[error("identity variant needs a vertex count divisible by {required}")]
    InvalidIdentityVariant { required: usize },

    #[error("vertex index {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("perfect state transfer endpoints must differ")]
    EqualPstVertices,

    #[error("tolerance must be positive")]
    InvalidTolerance,

    #[error("unsupported placement: {0}")]
    UnsupportedPlacement(String),

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("cannot force measurement outcome with probability {0:.3e}")]
    ForcedNullOutcome(f64),

    #[error("rotation parameter {0} outside [0, 1]")]
    ParameterOutOfRange(f64),

    #[error("unknown gate name {0:?}")]
    UnknownGate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
