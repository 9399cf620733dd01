//! First-moment estimates for the number of t-dependent k-sets in `G(n, p)`.

use serde::{Deserialize, Serialize};

use super::{avgdeg_tail_lower, avgdeg_tail_upper, lambda_star, ln_choose, TheoryParams};
use crate::{Error, Result};

/// Log-scale estimates of `E|S|`, where `S` is the family of t-dependent
/// k-subsets of `G(n, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DependentSetCountEstimate {
    pub n: u64,
    pub k: u64,
    pub t: u64,
    pub p: f64,
    /// `ln C(n,k) - C(k,2) Lambda*(t/(k-1))`: a rigorous upper bound, since a
    /// t-dependent set has average degree at most `t`.
    pub log_upper: f64,
    /// `ln C(n,k)` plus the log of the explicit lower bound on
    /// `Pr(avg degree <= t)`. For `t > 0` this bounds the average-degree
    /// relaxation from below, not `E|S|` itself; see `lower_is_proxy`.
    pub log_lower: f64,
    /// `k ln n (1 - (kappa/2) Lambda*(tau/kappa))` with `tau = t/ln n`,
    /// `kappa = k/ln n`.
    pub asymptotic_exponent: f64,
    /// `false` only for `t = 0`, where both estimates are the exact value
    /// `C(n,k) q^{C(k,2)}`.
    pub lower_is_proxy: bool,
}

fn check_instance(n: u64, k: u64, t: u64, params: &TheoryParams) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::precondition(format!("need 2 <= k <= n, got k = {k}, n = {n}")));
    }
    if t as f64 > params.p() * (k - 1) as f64 {
        return Err(Error::precondition(format!(
            "need t <= p(k-1), got t = {t}, p(k-1) = {}",
            params.p() * (k - 1) as f64
        )));
    }
    Ok(())
}

fn log_upper(n: u64, k: u64, t: u64, params: &TheoryParams) -> f64 {
    ln_choose(n, k) + avgdeg_tail_upper(k, t as f64, params).log_value
}

pub fn expected_dependent_sets_log(
    n: u64,
    k: u64,
    t: u64,
    params: &TheoryParams,
) -> Result<DependentSetCountEstimate> {
    check_instance(n, k, t, params)?;
    let upper = log_upper(n, k, t, params);
    let lower = if t == 0 {
        upper
    } else {
        ln_choose(n, k) + avgdeg_tail_lower(k, t as f64, params)?.log_value
    };
    let ln_n = (n as f64).ln();
    let kappa = k as f64 / ln_n;
    let asymptotic_exponent =
        k as f64 * ln_n * (1.0 - 0.5 * kappa * lambda_star(t as f64 / k as f64, params));
    Ok(DependentSetCountEstimate {
        n,
        k,
        t,
        p: params.p(),
        log_upper: upper,
        log_lower: lower,
        asymptotic_exponent,
        lower_is_proxy: t > 0,
    })
}

/// Markov certificate `Pr(alpha^t(G(n,p)) >= k_star) <= eps`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FirstMomentCertificate {
    pub k_star: u64,
    /// `ln` of the expected-count upper bound at `k_star`; at most `ln eps`.
    pub log_expected: f64,
    pub eps: f64,
}

impl FirstMomentCertificate {
    /// The certified bound `alpha^t <= k_star - 1`.
    pub fn alpha_upper(&self) -> u64 {
        self.k_star - 1
    }

    /// Certified lower bound `ceil(n / (k_star - 1))` on the t-improper
    /// chromatic number.
    pub fn chi_lower(&self, n: u64) -> u64 {
        n.div_ceil(self.alpha_upper())
    }
}

/// Smallest `k` with `t <= p(k-1)` and `ln C(n,k) - C(k,2) Lambda*(t/(k-1)) <= ln eps`.
/// `Ok(None)` when no `k <= n` qualifies.
pub fn first_moment_threshold_k(
    n: u64,
    t: u64,
    eps: f64,
    params: &TheoryParams,
) -> Result<Option<FirstMomentCertificate>> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::precondition(format!("failure budget must lie in (0, 1], got {eps}")));
    }
    let ln_eps = eps.ln();
    for k in 2..=n {
        if (t as f64) > params.p() * (k - 1) as f64 {
            continue;
        }
        let log_expected = log_upper(n, k, t, params);
        if log_expected <= ln_eps {
            return Ok(Some(FirstMomentCertificate { k_star: k, log_expected, eps }));
        }
    }
    Ok(None)
}
