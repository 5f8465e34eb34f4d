//! The single hypergeometric value the divergence bounds need.

use crate::{Error, Result};

/// 2F2(1, 1; 3/2, 2; x) for x >= 0.
///
/// The series reduces to sum_k x^k / ((k+1) (3/2)_k), all terms positive, so
/// there is no cancellation; the value grows like e^x and overflow is
/// signaled rather than returned as infinity.
pub fn hyp2f2_11_32_2(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(format!(
            "hyp2f2_11_32_2: need x >= 0, got {x}"
        )));
    }
    if x > 690.0 {
        return Err(Error::Overflow(format!(
            "hyp2f2_11_32_2({x}) exceeds the representable range"
        )));
    }
    let mut term = 1.0; // x^k / (3/2)_k
    let mut sum = 1.0; // k = 0 contribution: term / (k+1) = 1
    let mut k = 0.0;
    loop {
        term *= x / (1.5 + k);
        k += 1.0;
        let contrib = term / (k + 1.0);
        sum += contrib;
        if contrib < sum * 1e-17 || k > 5000.0 {
            break;
        }
    }
    Ok(sum)
}
