//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by graph generation, spectral analysis, and the
/// experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    /// Edge probability outside `[0, 1]` (or NaN).
    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    /// Marked-vertex index (or similar) out of `0..n`.
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// Operation requires a connected graph.
    #[error("graph is disconnected")]
    Disconnected,

    /// Operation requires every vertex to have at least one neighbor.
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    /// Operation needs the nominal edge probability, which deterministic
    /// generators and edge-list files do not carry.
    #[error("graph carries no nominal edge probability")]
    MissingNominalP,

    /// Input matrix is not symmetric within tolerance.
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {dev:e}")]
    NotSymmetric { i: usize, j: usize, dev: f64 },

    /// The eigensolver backend did not converge.
    #[error("eigendecomposition failed: {0}")]
    EigenFailed(String),

    /// Top eigenvalue is (numerically) degenerate, so the principal state is
    /// ill-defined. Typical cause: a disconnected graph.
    #[error(
        "degenerate top eigenvalue (gap {gap:e} < {tol:e}); the principal state is \
         ill-defined, the graph is likely disconnected"
    )]
    DegenerateTopEigenvalue { gap: f64, tol: f64 },

    /// Malformed edge-list input; `line` is 1-based.
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    /// Catch-all for violated preconditions.
    #[error("{0}")]
    InvalidArgument(String),

    /// File output failed; carries the destination path.
    #[error("failed writing {path}: {source}")]
    WriteFailed {
        path: String,
        source: std::io::Error,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
