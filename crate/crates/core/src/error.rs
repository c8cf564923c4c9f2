use thiserror::Error;

/// Errors raised by construction, analysis and parsing routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be at least 1")]
    EmptyGraph,

    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),

    #[error("bundle is not symmetric: ({i},{j}') present but ({j},{i}') missing")]
    AsymmetricBundle { i: usize, j: usize },

    #[error("base graph has {base} vertices but bundle has side {bundle}")]
    SideMismatch { base: usize, bundle: usize },

    #[error("vertex lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("depth must be at least 1")]
    ZeroDepth,

    #[error("{what}: {size} exceeds limit {limit}")]
    SizeLimit { what: &'static str, size: u128, limit: u128 },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("coloring covers {assigned} vertices but graph has {vertices}")]
    ColoringSize { assigned: usize, vertices: usize },

    #[error("vertex {vertex} has color {color} outside palette {palette}")]
    ColorOutOfPalette { vertex: usize, color: usize, palette: usize },

    #[error("order is not a permutation of the vertex set")]
    NotPermutation,

    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),

    #[error("graph is not regular")]
    NotRegular,

    #[error("spectrum is empty")]
    EmptySpectrum,

    #[error("unsupported {kind}: {name}")]
    Unsupported { kind: &'static str, name: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}
