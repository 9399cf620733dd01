//! Threshold functions for the size of the largest t-dependent set, in units
//! of `ln n`.
//!
//! Both are the unique crossing of an increasing function through 1, so they
//! are located by bracketing and bisection.

use super::{lambda_star, TheoryParams};
use crate::{Error, Result};

const MAX_ITERATIONS: usize = 200;
const ABS_TOLERANCE: f64 = 1e-12;

/// Bisection for the sign change of `f` on `(lo, hi)`, where `f(lo) < 0`.
/// `hi` is doubled until `f(hi) > 0`.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    while f(hi) <= 0.0 {
        lo = hi;
        hi *= 2.0;
    }
    for _ in 0..MAX_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= ABS_TOLERANCE || mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

fn check_tau(tau: f64) -> Result<()> {
    if tau.is_nan() || tau < 0.0 || tau.is_infinite() {
        return Err(Error::precondition(format!("tau must be a finite non-negative number, got {tau}")));
    }
    Ok(())
}

/// `(kappa/2) Lambda*(tau/kappa) - 1`, with `tau/kappa` read as 0 when `tau = 0`.
pub fn kappa_p_residual(kappa: f64, tau: f64, params: &TheoryParams) -> f64 {
    let x = if tau == 0.0 { 0.0 } else { tau / kappa };
    0.5 * kappa * lambda_star(x, params) - 1.0
}

/// The dense threshold: the unique `kappa > tau/p` with
/// `(kappa/2) Lambda*(tau/kappa) = 1`. `kappa_p(0) = 2 / ln b`.
pub fn kappa_p(tau: f64, params: &TheoryParams) -> Result<f64> {
    check_tau(tau)?;
    let floor = tau / params.p();
    let lo = floor * (1.0 + ABS_TOLERANCE);
    let hi = (floor + 1.0).max(4.0 / params.ln_b());
    Ok(bisect(|k| kappa_p_residual(k, tau, params), lo, hi))
}

/// `(kappa - tau - tau ln(kappa/tau)) / 2 - 1`; the logarithmic term is 0 at `tau = 0`.
pub fn kappa_sparse_residual(kappa: f64, tau: f64) -> f64 {
    if tau == 0.0 {
        return 0.5 * kappa - 1.0;
    }
    // kappa - tau - tau ln(kappa/tau) = tau (d - ln(1 + d)) with d = kappa/tau - 1.
    let d = kappa / tau - 1.0;
    0.5 * tau * (d - d.ln_1p()) - 1.0
}

/// The sparse threshold: the unique `kappa > tau` with
/// `(kappa - tau - tau ln(kappa/tau)) / 2 = 1`. `kappa(0) = 2`.
pub fn kappa_sparse(tau: f64) -> Result<f64> {
    check_tau(tau)?;
    let lo = tau * (1.0 + ABS_TOLERANCE);
    let hi = (tau + 1.0).max(4.0);
    Ok(bisect(|k| kappa_sparse_residual(k, tau), lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_at_zero() {
        let h = TheoryParams::new(0.5).unwrap();
        let k = kappa_p(0.0, &h).unwrap();
        assert!((k - 2.0 / std::f64::consts::LN_2).abs() < 1e-10);
        assert!((k - 2.885390).abs() < 1e-6);
        assert!((kappa_sparse(0.0).unwrap() - 2.0).abs() < 1e-10);
    }

    #[test]
    fn residuals_vanish() {
        for p in [0.1, 0.5, 0.9] {
            let params = TheoryParams::new(p).unwrap();
            for tau in [0.0, 0.1, 1.0, 10.0, 100.0] {
                let k = kappa_p(tau, &params).unwrap();
                assert!(k > tau / p);
                assert!(kappa_p_residual(k, tau, &params).abs() <= 1e-9, "p {p} tau {tau}");
            }
        }
        for tau in [0.5, 2.0, 20.0, 1e4] {
            let k = kappa_sparse(tau).unwrap();
            assert!(k > tau);
            assert!(kappa_sparse_residual(k, tau).abs() <= 1e-9);
        }
    }

    #[test]
    fn asymptotics() {
        let h = TheoryParams::new(0.5).unwrap();
        // kappa_p(tau) / (tau / p) at p = 1/2: 1.151539 (tau = 100), 1.045725 (tau = 1000).
        let r100 = kappa_p(100.0, &h).unwrap() / 200.0;
        let r1000 = kappa_p(1000.0, &h).unwrap() / 2000.0;
        assert!((r100 - 1.151_538_884_198_906).abs() < 1e-9, "{r100}");
        assert!((r1000 - 1.045_725_085_223_874).abs() < 1e-9, "{r1000}");
        assert!(1.0 < r1000 && r1000 < 1.1 && r1000 < r100);
        let ratio = kappa_sparse(1e4).unwrap() / 1e4;
        assert!(ratio > 1.0 && ratio < 1.05, "{ratio}");
    }

    #[test]
    fn negative_tau_rejected() {
        let h = TheoryParams::new(0.5).unwrap();
        assert!(kappa_p(-0.1, &h).is_err());
        assert!(kappa_sparse(-1.0).is_err());
        assert!(kappa_sparse(f64::NAN).is_err());
    }
}
