//! Error taxonomy shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Invalid configuration (precision below the supported floor, bad flags).
    #[error("configuration error: {0}")]
    Config(String),

    /// Input outside the domain of the named function.
    #[error("domain error in `{func}`: {msg}")]
    Domain { func: &'static str, msg: String },

    /// Gamma pole hit at a nonpositive integer.
    #[error("pole of gamma at nonpositive integer {0}")]
    Pole(i64),

    /// Evaluation at a singular point of the map or function.
    #[error("singularity error: {0}")]
    Singularity(String),

    /// Point lies on a branch cut and no side annotation was supplied.
    #[error("branch error: {0}")]
    Branch(String),

    /// Parameters violate the regime contract of an expansion.
    #[error("regime error: {0}")]
    Regime(String),

    /// Asymptotic tail refuses to decrease below 1 before truncation.
    #[error("truncation error: last retained term {last_term:e} at index {index}")]
    Truncation { last_term: f64, index: usize },

    /// Contour quadrature failed to converge within the node budget.
    #[error("quadrature error: no convergence at M = {nodes} (delta {delta:e})")]
    Quadrature { nodes: usize, delta: f64 },

    /// Evaluation point too close to (or on) the contour.
    #[error("geometry error: {0}")]
    Geometry(String),

    /// No oracle route covers the requested point.
    #[error("oracle gap: {0}")]
    OracleGap(String),

    /// Violated internal invariant (nonzero remainder, failed removability).
    /// Always indicates a bug in the coefficient machinery, never bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
