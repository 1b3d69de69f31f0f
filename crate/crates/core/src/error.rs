use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-contract input (non-primitive vector, degenerate
    /// sample set, bad configuration value).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Input outside an operation's mathematical domain (boundary vector,
    /// exponent at or below the divergence threshold, negative term under a
    /// non-integer power).
    #[error("domain error: {0}")]
    Domain(String),

    /// 64-bit entry arithmetic overflowed while building a tree node.
    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),

    /// Tangent-line geometry degenerated (near-parallel lines, tangency at
    /// infinity).
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    /// Adaptive quadrature ran out of subdivisions before reaching the
    /// requested tolerance; `best` carries the estimate it did reach.
    #[error("tolerance not met: best estimate {best:e}, requested {requested:e}")]
    ToleranceNotMet { best: f64, requested: f64 },

    /// Operation not defined for this curve or configuration.
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
