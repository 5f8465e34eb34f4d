//! Self-contained special-function kernel.
//!
//! Everything here is deterministic, allocation-free per call and reentrant:
//! Lambert W branches, the log-gamma family, regularized incomplete
//! gamma/beta, error functions, the exponential integral, the one
//! hypergeometric value 2F2(1,1;3/2,2;x) the divergence bounds need, and the
//! standard normal CDF.

mod erf;
mod expint;
mod gamma;
mod hyp;
mod lambert;

pub use erf::{erf, erfc, erfi, normal_cdf};
pub use expint::{e1, e1_scaled, expint_ei};
pub use gamma::{digamma, log_gamma, reg_lower_gamma, reg_upper_gamma, trigamma};
pub use hyp::hyp2f2_11_32_2;
pub use lambert::{lambert_w0, lambert_wm1};

mod beta;
pub use beta::reg_inc_beta;

/// Convergence control for the iterative kernels.
#[derive(Debug, Clone, Copy)]
pub struct Accuracy {
    /// Relative tolerance for iterative refinement.
    pub rel_tol: f64,
    /// Hard cap on iterations before reporting non-convergence.
    pub max_iter: usize,
}

impl Default for Accuracy {
    fn default() -> Self {
        Accuracy {
            rel_tol: 1e-12,
            max_iter: 500,
        }
    }
}

impl Accuracy {
    pub fn new(rel_tol: f64, max_iter: usize) -> crate::Result<Self> {
        if !(rel_tol > 0.0) {
            return Err(crate::Error::Config(format!(
                "rel_tol must be positive, got {rel_tol}"
            )));
        }
        if max_iter == 0 {
            return Err(crate::Error::Config("max_iter must be at least 1".into()));
        }
        Ok(Accuracy { rel_tol, max_iter })
    }
}

/// The Euler-Mascheroni constant.
pub const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_9;

/// 1/e, the left edge of the Lambert W domain (negated).
pub const INV_E: f64 = 0.367_879_441_171_442_33;
