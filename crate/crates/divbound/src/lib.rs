//! Certified lower/upper bounds and exact values for the total variation
//! distance and the Kullback-Leibler divergence between high-dimensional
//! distributions: generic centered elliptical pairs, multivariate Student-t
//! against diagonal-covariance normal, and products of independent Gamma
//! laws, together with Monte Carlo and quadrature oracles that can verify
//! every bound at desk scale.

pub mod error;
pub mod specfun;

pub use error::{Error, Result};
