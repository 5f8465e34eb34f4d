//! Exponential integrals E1 and Ei.

use super::EULER_MASCHERONI;
use crate::{Error, Result};

/// E1(z) = int_z^inf e^{-t}/t dt for z > 0.
pub fn e1(z: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(Error::Domain(format!("e1: need z > 0, got {z}")));
    }
    if z <= 1.0 {
        // E1(z) = -gamma - ln z + sum_{k>=1} (-1)^{k+1} z^k / (k k!)
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 1..=60 {
            let k = k as f64;
            term *= -z / k;
            let contrib = -term / k;
            sum += contrib;
            if contrib.abs() < sum.abs() * 1e-17 {
                break;
            }
        }
        Ok(-EULER_MASCHERONI - z.ln() + sum)
    } else {
        Ok((-z).exp() * e1_cf(z)?)
    }
}

/// e^z E1(z), stable for arbitrarily large z (decays like 1/z).
pub fn e1_scaled(z: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(Error::Domain(format!("e1_scaled: need z > 0, got {z}")));
    }
    if z <= 1.0 {
        Ok(z.exp() * e1(z)?)
    } else {
        e1_cf(z)
    }
}

/// Modified Lentz evaluation of the continued fraction
/// e^z E1(z) = 1/(z + 1 - 1/(z + 3 - 4/(z + 5 - 9/(...)))).
fn e1_cf(z: f64) -> Result<f64> {
    let tiny = 1e-300;
    let mut b = z + 1.0;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=400 {
        let a = -(i as f64) * (i as f64);
        b += 2.0;
        d = a * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + a / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = d.recip();
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            return Ok(h);
        }
    }
    Err(Error::Convergence(format!(
        "E1 continued fraction stalled at z = {z}"
    )))
}

/// Exponential integral Ei(x) = int_{-inf}^x e^t / t dt, restricted to x < 0
/// where Ei(x) = -E1(-x).
pub fn expint_ei(x: f64) -> Result<f64> {
    if !(x < 0.0) {
        return Err(Error::Domain(format!("expint_ei: need x < 0, got {x}")));
    }
    Ok(-e1(-x)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Quadrature oracle for int_{-inf}^{x} e^t/t dt, x < 0: substitute
    /// t = x - u so the domain becomes [0, inf), then composite Simpson on
    /// e^{x-u}/(x-u) out to u = 60 (the tail beyond is below 1e-26 e^x).
    fn ei_oracle(x: f64) -> f64 {
        let f = |u: f64| (x - u).exp() / (x - u);
        let n = 600_000;
        let h = 60.0 / n as f64;
        let mut s = f(0.0) + f(60.0);
        for i in 1..n {
            let u = i as f64 * h;
            s += f(u) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        s * h / 3.0
    }

    #[test]
    fn ei_matches_quadrature_oracle() {
        for &x in &[-0.5, -1.0, -2.5] {
            let v = expint_ei(x).unwrap();
            let o = ei_oracle(x);
            assert!((v - o).abs() < 1e-9 * v.abs(), "Ei({x}): {v} vs oracle {o}");
        }
    }

    #[test]
    fn scaled_version_consistent() {
        for &z in &[0.2, 0.9, 1.0, 1.5, 10.0, 300.0] {
            let s = e1_scaled(z).unwrap();
            if z < 500.0 {
                let plain = e1(z).unwrap();
                assert!((s - z.exp() * plain).abs() < 1e-12 * s);
            }
            // e^z E1(z) in (1/(z+1), 1/z)
            assert!(s > 1.0 / (z + 1.0) && s < 1.0 / z, "bracket at z = {z}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(expint_ei(0.0).is_err());
        assert!(expint_ei(1.0).is_err());
        assert!(e1(0.0).is_err());
    }
}
