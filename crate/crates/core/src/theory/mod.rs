//! Large-deviation estimates for binomial lower tails and the threshold
//! functions that locate the t-dependence number of `G(n, p)`.
//!
//! All probabilities are carried as natural logarithms so that tails of
//! order `e^{-1000}` compare correctly.

mod binomial;
mod counts;
mod kappa;
mod mixed;
mod rate;

pub use binomial::{
    avgdeg_tail_lower, avgdeg_tail_upper, bindev_lower, bindev_upper, binom_tail_exact,
    sparse_avgdeg_tail_upper,
};
pub use counts::{
    expected_dependent_sets_log, first_moment_threshold_k, DependentSetCountEstimate,
    FirstMomentCertificate,
};
pub use kappa::{kappa_p, kappa_p_residual, kappa_sparse, kappa_sparse_residual};
pub use mixed::{mixedbin_tail_exact, mixedbin_upper, MIXED_EXACT_CAP};
pub use rate::{lambda_star, ln_choose};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// `(2 pi)^{-1/2} e^{-1/6}`, the constant in the Stirling-based lower bound
/// for binomial lower tails.
pub const DELTA: f64 = 0.337_697_349_645_999_75;

/// Edge probability `p` with `q = 1 - p` and `b = 1 / q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TheoryParams {
    p: f64,
    q: f64,
    b: f64,
    ln_p: f64,
    ln_q: f64,
}

impl TheoryParams {
    /// `p` must lie strictly between 0 and 1.
    pub fn new(p: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::InvalidProbability(p));
        }
        let q = 1.0 - p;
        Ok(TheoryParams { p, q, b: 1.0 / q, ln_p: p.ln(), ln_q: (-p).ln_1p() })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `ln b = ln(1/q)`.
    pub fn ln_b(&self) -> f64 {
        -self.ln_q
    }

    pub(crate) fn ln_p(&self) -> f64 {
        self.ln_p
    }

    pub(crate) fn ln_q(&self) -> f64 {
        self.ln_q
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Exact,
    Upper,
    Lower,
}

/// A probability, or a bound on one, stored as its natural logarithm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TailBound {
    pub log_value: f64,
    pub kind: BoundKind,
    /// Set when the inputs fall outside the regime where the estimate says
    /// anything and the trivial bound `1` was returned instead.
    pub trivial: bool,
}

impl TailBound {
    pub(crate) fn new(log_value: f64, kind: BoundKind) -> Self {
        // Clamp tiny positive rounding so the value is a probability.
        TailBound { log_value: log_value.min(0.0), kind, trivial: false }
    }

    pub(crate) fn trivial_upper() -> Self {
        TailBound { log_value: 0.0, kind: BoundKind::Upper, trivial: true }
    }

    pub fn value(&self) -> f64 {
        self.log_value.exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_are_consistent() {
        for p in [1e-9, 0.1, 0.5, 0.7, 0.999] {
            let t = TheoryParams::new(p).unwrap();
            assert_eq!(t.q(), 1.0 - p);
            assert!((t.b() * t.q() - 1.0).abs() < 4.0 * f64::EPSILON);
            assert!((t.ln_b() - t.b().ln()).abs() < 1e-12 * t.ln_b().max(1e-300).max(1.0));
        }
        for p in [0.0, 1.0, -0.5, 2.0, f64::NAN] {
            assert!(TheoryParams::new(p).is_err());
        }
    }

    #[test]
    fn delta_matches_definition() {
        let d = (2.0 * std::f64::consts::PI).powf(-0.5) * (-1.0f64 / 6.0).exp();
        assert!((DELTA - d).abs() < 1e-15);
        assert!((DELTA - 0.337697).abs() < 1e-6);
    }
}
