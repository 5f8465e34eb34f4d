//! Independent ground-truth machinery: Monte Carlo estimators and
//! quadrature, used by the test suite to verify every bound and exposed for
//! desk-scale verification of user configurations.

pub mod mc;
pub mod quad;

pub use mc::{
    mc_kl, mc_tv, sample_diag_normal, sample_gamma_product, sample_student, DiagNormalSampler,
    GammaProductSampler, LogDensity, McConfig, McResult, PointSampler, StudentSampler,
};
pub use quad::{gauss_laguerre_rule, quad_adaptive, quad_gauss_laguerre, GaussLaguerre, QuadResult};
