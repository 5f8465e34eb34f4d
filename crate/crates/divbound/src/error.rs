use thiserror::Error;

/// Errors produced by the numerical kernels and bound computations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("did not converge: {0}")]
    Convergence(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("matrix is not symmetric positive definite: {0}")]
    NotSpd(String),

    #[error("dimension n = {n} is below the validity threshold n0 = {n0}")]
    DimensionTooSmall { n: usize, n0: usize },

    #[error("dimension n = {n} exceeds the supported maximum {max}")]
    DimensionTooLarge { n: usize, max: usize },

    #[error("quadrature did not converge: achieved error {achieved:.3e}, requested {requested:.3e}")]
    QuadratureAccuracy { achieved: f64, requested: f64 },

    #[error("generator comparison found {0} sign changes; generators look pathological")]
    PathologicalGenerator(usize),

    #[error("generator failed validation: {0}")]
    InvalidGenerator(String),

    #[error("non-finite log-density at sample {index}: {value}")]
    NonFiniteLogDensity { index: u64, value: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
