use serde::{Deserialize, Serialize};

use super::emit::round_sig;
use crate::theory::{first_moment_threshold_k, kappa_p, TheoryParams};
use crate::{Error, Result};

/// Asymptotic predictions for `G(n, p)` at a fixed `t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoryPrediction {
    pub n: usize,
    pub p: f64,
    pub t: u64,
    /// `t / ln n`.
    pub tau: f64,
    pub kappa_p: f64,
    /// `n / (kappa_p(tau) ln n)`.
    pub chi_predicted: f64,
    /// `kappa_p(tau) ln n`.
    pub alpha_predicted: f64,
    /// First-moment threshold: `Pr(alpha^t >= k_star) <= eps`. `None` when no `k <= n` qualifies.
    pub k_star: Option<u64>,
    pub eps: f64,
    /// `ceil(x)` in x-mode.
    pub step_value: Option<u64>,
}

/// Evaluates the prediction; floats are rounded to the emitted precision.
pub fn theory_curve(n: usize, p: f64, t: u64, eps: f64, x: Option<f64>) -> Result<TheoryPrediction> {
    if n < 3 {
        return Err(Error::precondition(format!("predictions need n >= 3, got {n}")));
    }
    let params = TheoryParams::new(p)?;
    let ln_n = (n as f64).ln();
    let tau = t as f64 / ln_n;
    let kappa = kappa_p(tau, &params)?;
    let k_star = first_moment_threshold_k(n as u64, t, eps, &params)?.map(|c| c.k_star);
    Ok(TheoryPrediction {
        n,
        p,
        t,
        tau: round_sig(tau),
        kappa_p: round_sig(kappa),
        chi_predicted: round_sig(n as f64 / (kappa * ln_n)),
        alpha_predicted: round_sig(kappa * ln_n),
        k_star,
        eps,
        step_value: x.map(|x| x.ceil() as u64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_scale_at_t_zero() {
        let pr = theory_curve(1000, 0.5, 0, 0.01, None).unwrap();
        let expected = 2.0 / std::f64::consts::LN_2 * 1000f64.ln();
        assert!((pr.alpha_predicted - expected).abs() < 1e-9);
        assert!((pr.chi_predicted * pr.alpha_predicted - 1000.0).abs() < 1e-6);
        assert_eq!(pr.step_value, None);
    }

    #[test]
    fn step_value_and_threshold() {
        let pr = theory_curve(300, 0.5, 60, 0.01, Some(2.5)).unwrap();
        assert_eq!(pr.step_value, Some(3));
        assert_eq!(pr.k_star, Some(150));
        assert!(pr.chi_predicted > 0.0 && pr.alpha_predicted.is_finite());
        let pr = theory_curve(60, 0.5, 0, 1.0, None).unwrap();
        assert_eq!(pr.k_star, Some(9));
    }

    #[test]
    fn preconditions() {
        assert!(theory_curve(2, 0.5, 0, 0.01, None).is_err());
        assert!(theory_curve(10, 1.0, 0, 0.01, None).is_err());
    }
}
