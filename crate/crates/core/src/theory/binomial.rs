use super::{lambda_star, BoundKind, TailBound, TheoryParams, DELTA};
use crate::graph::pair_count;
use crate::{Error, Result};

/// `ln sum_i exp(terms[i])` without overflow.
pub(crate) fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + terms.iter().map(|&t| (t - max).exp()).sum::<f64>().ln()
}

/// Exact `Pr(Bin(n, p) <= floor(k))`, summed in log space.
pub fn binom_tail_exact(n: u64, k: f64, params: &TheoryParams) -> TailBound {
    let exact = |log| TailBound::new(log, BoundKind::Exact);
    if k.is_nan() || k < 0.0 {
        return exact(f64::NEG_INFINITY);
    }
    let k = k.floor();
    if k >= n as f64 {
        return exact(0.0);
    }
    let k = k as u64;
    let (ln_p, ln_q) = (params.ln_p(), params.ln_q());
    let mut terms = Vec::with_capacity(k as usize + 1);
    let mut ln_c = 0.0;
    for j in 0..=k {
        if j > 0 {
            ln_c += ((n - j + 1) as f64 / j as f64).ln();
        }
        terms.push(ln_c + j as f64 * ln_p + (n - j) as f64 * ln_q);
    }
    exact(log_sum_exp(&terms))
}

/// `Pr(X <= k) <= exp(-n Lambda*(k/n))` for `X ~ Bin(n, p)`, valid for real
/// `k <= np`. Above the mean the trivial bound 1 is returned, flagged.
pub fn bindev_upper(n: u64, k: f64, params: &TheoryParams) -> TailBound {
    if k.is_nan() || k < 0.0 {
        return TailBound::new(f64::NEG_INFINITY, BoundKind::Upper);
    }
    if n == 0 {
        return TailBound::new(0.0, BoundKind::Upper);
    }
    let n_f = n as f64;
    if k > n_f * params.p() {
        return TailBound::trivial_upper();
    }
    TailBound::new(-n_f * lambda_star(k / n_f, params), BoundKind::Upper)
}

/// `Pr(X <= k) >= delta max{k^{-1/2}, (n-k)^{-1/2}} exp(-n Lambda*(k/n))` for
/// integers `1 <= k <= np`.
pub fn bindev_lower(n: u64, k: u64, params: &TheoryParams) -> Result<TailBound> {
    let n_f = n as f64;
    if k == 0 || k as f64 > n_f * params.p() {
        return Err(Error::precondition(format!(
            "Stirling lower bound needs 1 <= k <= np, got k = {k}, np = {}",
            n_f * params.p()
        )));
    }
    let k_f = k as f64;
    let prefactor = (-0.5 * k_f.ln()).max(-0.5 * (n_f - k_f).ln());
    let log = DELTA.ln() + prefactor - n_f * lambda_star(k_f / n_f, params);
    Ok(TailBound::new(log, BoundKind::Lower))
}

fn avgdeg_regime(k: u64, t: f64, params: &TheoryParams) -> bool {
    k >= 2 && t >= 0.0 && t <= params.p() * (k - 1) as f64
}

/// Upper bound on `Pr(avg degree of G(k, p) <= t)`:
/// `exp(-C(k,2) Lambda*(t/(k-1)))`.
///
/// Average degree at most `t` is the event "at most `kt/2` edges", so this is
/// [`bindev_upper`] applied to the edge count. Outside `t <= p(k-1)` the
/// trivial bound is returned with `trivial` set.
pub fn avgdeg_tail_upper(k: u64, t: f64, params: &TheoryParams) -> TailBound {
    if !avgdeg_regime(k, t, params) {
        return TailBound::trivial_upper();
    }
    let pairs = pair_count(k as usize) as f64;
    TailBound::new(-pairs * lambda_star(t / (k - 1) as f64, params), BoundKind::Upper)
}

/// Lower bound on `Pr(avg degree of G(k, p) <= t)`, obtained from
/// [`bindev_lower`] on `Bin(C(k,2), p)` at the integer edge budget
/// `floor(kt/2)`.
pub fn avgdeg_tail_lower(k: u64, t: f64, params: &TheoryParams) -> Result<TailBound> {
    if !avgdeg_regime(k, t, params) {
        return Err(Error::precondition(format!(
            "average-degree tail needs k >= 2 and 0 <= t <= p(k-1), got k = {k}, t = {t}"
        )));
    }
    let budget = (k as f64 * t / 2.0).floor() as u64;
    if budget == 0 {
        return Err(Error::precondition("average-degree lower bound needs floor(kt/2) >= 1"));
    }
    bindev_lower(pair_count(k as usize), budget, params)
}

/// Chernoff-form upper bound for the sparse regime:
/// `exp(-C(k,2) p (u ln u + 1 - u))` with `u = t / (p(k-1))`.
pub fn sparse_avgdeg_tail_upper(k: u64, t: f64, params: &TheoryParams) -> Result<TailBound> {
    if !(k >= 2 && t > 0.0 && t <= params.p() * (k - 1) as f64) {
        return Err(Error::precondition(format!(
            "sparse Chernoff bound needs k >= 2 and 0 < t <= p(k-1), got k = {k}, t = {t}"
        )));
    }
    let u = t / (params.p() * (k - 1) as f64);
    let pairs = pair_count(k as usize) as f64;
    let h = u * u.ln() + 1.0 - u;
    Ok(TailBound::new(-pairs * params.p() * h.max(0.0), BoundKind::Upper))
}
