use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CsfError {
    #[error("line {line}: malformed input {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has a cycle")]
    HasCycle,
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex counts differ ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("trees are isomorphic")]
    Isomorphic,
    #[error("{what} = {value} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },
    #[error("{what} = {value} is below the minimum of {min}")]
    TooSmall { what: &'static str, value: usize, min: usize },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("unsupported basis {0}")]
    UnsupportedBasis(&'static str),
    #[error("invalid spider: {0}")]
    InvalidSpider(String),
    #[error("invalid star connection: {0}")]
    InvalidStarConnection(String),
    #[error("invalid symmetric function: {0}")]
    InvalidSymmetricFunction(String),
    #[error("{0}")]
    InvalidArgument(String),
}

impl CsfError {
    /// Short machine-readable tag for diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            CsfError::Malformed { .. } => "malformed",
            CsfError::Loop { .. } => "loop",
            CsfError::DuplicateEdge { .. } => "duplicate_edge",
            CsfError::VertexOutOfRange { .. } => "vertex_out_of_range",
            CsfError::NotConnected => "not_connected",
            CsfError::HasCycle => "has_cycle",
            CsfError::Empty => "empty",
            CsfError::SizeMismatch(..) => "size_mismatch",
            CsfError::Isomorphic => "isomorphic",
            CsfError::CapExceeded { .. } => "cap_exceeded",
            CsfError::TooSmall { .. } => "too_small",
            CsfError::Overflow(_) => "overflow",
            CsfError::UnsupportedBasis(_) => "unsupported_basis",
            CsfError::InvalidSpider(_) => "invalid_spider",
            CsfError::InvalidStarConnection(_) => "invalid_star_connection",
            CsfError::InvalidSymmetricFunction(_) => "invalid_symmetric_function",
            CsfError::InvalidArgument(_) => "invalid_argument",
        }
    }
}

pub type Result<T, E = CsfError> = std::result::Result<T, E>;
