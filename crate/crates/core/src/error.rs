use thiserror::Error;

/// Errors raised by graph construction, parsing and canonical labeling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("canonical labeling supports at most {cap} vertices, got {order}")]
    UnsupportedSize { order: usize, cap: usize },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
}

/// Errors raised by the distance-spectrum routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("graph is disconnected: vertices {u} and {v} are at infinite distance")]
    Disconnected { u: usize, v: usize },
    #[error("empty graph has no distance matrix")]
    EmptyGraph,
    #[error("power iteration did not converge after {iterations} iterations (estimate {estimate}, residual {residual:e})")]
    NoConvergence {
        iterations: usize,
        estimate: f64,
        residual: f64,
    },
    #[error("invalid tolerance {0}")]
    InvalidTolerance(f64),
    #[error("not a partition of the vertex set: {0}")]
    NotAPartition(String),
    #[error("partition is not equitable: vertex {vertex} of part {part} has block sum {found} into part {into}, expected {expected}")]
    NotEquitable {
        part: usize,
        vertex: usize,
        into: usize,
        found: i64,
        expected: i64,
    },
    #[error("Perron vector is not constant on part {part}: spread {spread:e} exceeds {limit:e}")]
    NonConstantPart { part: usize, spread: f64, limit: f64 },
}

/// Errors raised by the extendability deciders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("graph has no bipartition metadata")]
    MissingBipartition,
    #[error("exhaustive subset scan supports at most {cap} vertices, got {order}")]
    UnsupportedSize { order: usize, cap: usize },
}

/// Errors raised by the verification harness.
#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Extend(#[from] ExtendError),
    #[error("built-in enumeration supports order at most {cap}, got {order}; supply a graph6 file")]
    UnsupportedOrder { order: usize, cap: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}, line {line}: {source}")]
    Input {
        path: String,
        line: usize,
        #[source]
        source: GraphError,
    },
}
