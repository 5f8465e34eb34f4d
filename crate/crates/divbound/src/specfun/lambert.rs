//! Lambert W function, principal and lower real branches.
//!
//! Halley iteration seeded by branch-specific guesses; the seed switches to
//! the branch-point expansion near -1/e where the derivative of w e^w
//! vanishes and generic starting points stall.

use super::INV_E;
use crate::{Error, Result};

/// Slack around -1/e inside which an argument is snapped to the branch point.
const BRANCH_TOL: f64 = 1e-14;

/// Principal branch W0 on [-1/e, inf): the solution w >= -1 of w e^w = x.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("lambert_w0: non-finite input {x}")));
    }
    if (x + INV_E).abs() <= BRANCH_TOL * INV_E {
        return Ok(-1.0);
    }
    if x < -INV_E {
        return Err(Error::Domain(format!(
            "lambert_w0: {x} below the branch point -1/e"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }

    let w0 = if x < -0.3 {
        branch_point_seed(x, 1.0)
    } else if x < 1.5 {
        // Crude seed; Halley contracts fast in this well-conditioned range.
        x.ln_1p().max(-0.99)
    } else {
        let l = x.ln();
        l - l.ln()
    };

    match halley(x, w0) {
        Some(w) if w >= -1.0 - 1e-9 => Ok(w.max(-1.0)),
        _ => bisect_w0(x),
    }
}

/// Lower branch W-1 on [-1/e, 0): the solution w <= -1 of w e^w = x.
pub fn lambert_wm1(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("lambert_wm1: non-finite input {x}")));
    }
    if x >= 0.0 {
        return Err(Error::Domain(format!(
            "lambert_wm1: {x} outside [-1/e, 0)"
        )));
    }
    if (x + INV_E).abs() <= BRANCH_TOL * INV_E {
        return Ok(-1.0);
    }
    if x < -INV_E {
        return Err(Error::Domain(format!(
            "lambert_wm1: {x} below the branch point -1/e"
        )));
    }

    let w0 = if x < -0.25 {
        branch_point_seed(x, -1.0)
    } else {
        // w ~ ln(-x) - ln(-ln(-x)) as x -> 0^-
        let l = (-x).ln();
        l - (-l).ln()
    };

    match halley(x, w0) {
        Some(w) if w <= -1.0 + 1e-9 => Ok(w.min(-1.0)),
        _ => bisect_wm1(x),
    }
}

/// Series around the branch point: w = -1 + p - p^2/3 + 11 p^3/72, with
/// p = sign * sqrt(2 (1 + e x)). sign = +1 selects W0, -1 selects W-1.
fn branch_point_seed(x: f64, sign: f64) -> f64 {
    let q = 2.0 * (1.0 + std::f64::consts::E * x);
    let p = sign * q.max(0.0).sqrt();
    -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0
}

fn halley(x: f64, mut w: f64) -> Option<f64> {
    for _ in 0..60 {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        if denom == 0.0 || !denom.is_finite() {
            return None;
        }
        let step = f / denom;
        let w_next = w - step;
        if !w_next.is_finite() {
            return None;
        }
        if (w_next - w).abs() <= 1e-16 * (w_next.abs() + 1e-3) {
            // Residual check so a stalled iteration cannot masquerade as converged.
            let resid = w_next * w_next.exp() - x;
            if resid.abs() <= 1e-10 * x.abs().max(1e-300) + 1e-300 {
                return Some(w_next);
            }
            return None;
        }
        w = w_next;
    }
    None
}

fn bisect_w0(x: f64) -> Result<f64> {
    // w e^w is increasing on [-1, inf).
    let mut lo = -1.0;
    let mut hi = if x < 1.0 { 1.0 } else { x.ln() + 1.0 };
    let g = |w: f64| w * w.exp() - x;
    if g(lo) > 0.0 || g(hi) < 0.0 {
        return Err(Error::Convergence(format!(
            "lambert_w0: no bracket for x = {x}"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn bisect_wm1(x: f64) -> Result<f64> {
    // w e^w is decreasing on (-inf, -1]; values run from 0^- down to -1/e.
    let mut lo = -750.0;
    let mut hi = -1.0;
    let g = |w: f64| w * w.exp() - x;
    if g(hi) > 0.0 || g(lo) < 0.0 {
        return Err(Error::Convergence(format!(
            "lambert_wm1: no bracket for x = {x}"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent scalar oracle: Newton iteration on w e^w = x from a safe
    /// bracket midpoint, kept separate from the Halley production path.
    fn newton_w0(x: f64) -> f64 {
        let mut w: f64 = if x > 1.0 { x.ln() } else { 0.0 };
        for _ in 0..200 {
            let f = w * w.exp() - x;
            let fp = w.exp() * (w + 1.0);
            let next = w - f / fp;
            if (next - w).abs() < 1e-15 * (1.0 + w.abs()) {
                return next;
            }
            w = next;
        }
        w
    }

    #[test]
    fn w0_fixed_points() {
        assert_eq!(lambert_w0(0.0).unwrap(), 0.0);
        assert!((lambert_w0(-INV_E).unwrap() + 1.0).abs() < 1e-10);
        // Omega constant, frozen from the Newton oracle below.
        let omega = newton_w0(1.0);
        assert!((omega - 0.567_143_290_409_783_8).abs() < 1e-14);
        assert!((lambert_w0(1.0).unwrap() - omega).abs() < 1e-14);
        assert!((lambert_w0(std::f64::consts::E).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn wm1_fixed_points() {
        assert!((lambert_wm1(-INV_E).unwrap() + 1.0).abs() < 1e-10);
        // -2 e^{-2}: W-1 must recover -2 exactly.
        let x = -2.0 * (-2.0f64).exp();
        assert!((lambert_wm1(x).unwrap() + 2.0).abs() < 1e-12);
    }

    #[test]
    fn wm1_roundtrips_from_bisection_oracle() {
        for &x in &[-0.1, -0.2, -0.3, -0.36, -0.367] {
            let w = lambert_wm1(x).unwrap();
            assert!(w <= -1.0, "wm1({x}) = {w} not <= -1");
            let resid = (w * w.exp() - x).abs();
            assert!(resid <= 1e-12 * x.abs(), "wm1 roundtrip {x}: resid {resid}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(lambert_w0(-0.4).is_err());
        assert!(lambert_wm1(-0.4).is_err());
        assert!(lambert_wm1(0.0).is_err());
        assert!(lambert_wm1(0.5).is_err());
    }

    #[test]
    fn roundtrip_log_spaced() {
        // 1000 log-spaced points per branch domain, relative residual 1e-10.
        for i in 0..1000 {
            let t = i as f64 / 999.0;
            // W0 over (0, 1e8], log-spaced.
            let xpos = 1e-8 * (1e16f64).powf(t);
            let w = lambert_w0(xpos).unwrap();
            assert!(
                (w * w.exp() - xpos).abs() <= 1e-10 * xpos,
                "w0 roundtrip failed at {xpos}"
            );
            // Both branches over [-1/e, 0): log-spaced distance from the
            // branch point, x = -1/e + (1/e - eps) * 10^{-8 t}.
            let xm = (-INV_E + (INV_E - 1e-12) * (1e-8f64).powf(1.0 - t)).min(-1e-12);
            let w = lambert_w0(xm).unwrap();
            assert!(
                (w * w.exp() - xm).abs() <= 1e-10 * xm.abs(),
                "w0 roundtrip failed at {xm}"
            );
            let w = lambert_wm1(xm).unwrap();
            assert!(
                (w * w.exp() - xm).abs() <= 1e-10 * xm.abs(),
                "wm1 roundtrip failed at {xm}"
            );
        }
    }

    #[test]
    fn branch_ordering_on_common_domain() {
        for i in 1..100 {
            let x = -INV_E * i as f64 / 100.0;
            let w0 = lambert_w0(x).unwrap();
            let wm1 = lambert_wm1(x).unwrap();
            assert!(wm1 <= -1.0 + 1e-12 && w0 >= -1.0 - 1e-12 && wm1 <= w0);
        }
    }
}
