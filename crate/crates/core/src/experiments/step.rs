use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{round_half_up, ExperimentConfig, Mode};
use super::emit::round_sig;
use super::run::with_workers;
use crate::colouring::lovasz_decomposition;
use crate::theory::{first_moment_threshold_k, TheoryParams};
use crate::{mix_seed, Error, Graph, Result, RngSeed};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepTrial {
    pub trial_index: u64,
    pub derived_seed: u64,
    pub chi_upper_lovasz: usize,
    /// `chi_upper_lovasz <= step_value`.
    pub upper_holds: bool,
    /// Upper bound holds and the certificate forces `chi^t >= step_value`.
    pub concluded: bool,
}

/// Outcome of the `chi^t = ceil(x)` check at one vertex count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepReport {
    pub n: usize,
    pub p: f64,
    pub x: f64,
    /// `round(n p / x)`.
    pub t: u64,
    /// `ceil(x)`.
    pub step_value: u64,
    pub eps: f64,
    pub k_star: Option<u64>,
    /// Certified `alpha^t <= k_star - 1` (probability at least `1 - eps` per sample).
    pub alpha_certified_upper: Option<u64>,
    /// `(k_star - 1)(step_value - 1) < n`, so `step_value - 1` classes cannot cover the graph.
    pub lower_certified: bool,
    pub trials: Vec<StepTrial>,
    pub upper_fraction: f64,
    pub success_fraction: f64,
}

/// Indices `first_index..first_index + trials` are used for seed derivation.
pub fn step_experiment_indexed(
    n: usize,
    p: f64,
    x: f64,
    trials: u64,
    seed: RngSeed,
    eps: f64,
    first_index: u64,
) -> Result<StepReport> {
    if !(x > 0.0 && x.is_finite()) || x.fract() == 0.0 {
        return Err(Error::precondition(format!("x must be positive and not an integer, got {x}")));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::precondition(format!("step experiment needs 0 < p < 1, got {p}")));
    }
    if trials == 0 {
        return Err(Error::precondition("at least one trial is required"));
    }
    let params = TheoryParams::new(p)?;
    let t = round_half_up(n as f64 * p / x);
    let step_value = x.ceil() as u64;
    let cert = first_moment_threshold_k(n as u64, t, eps, &params)?;
    let alpha_certified_upper = cert.map(|c| c.alpha_upper());
    let lower_certified = alpha_certified_upper.is_some_and(|a| a * (step_value - 1) < n as u64);
    let trials: Vec<StepTrial> = (first_index..first_index + trials)
        .into_par_iter()
        .map(|trial_index| {
            let s = mix_seed(seed, trial_index);
            let g = Graph::sample_gnp(n, p, s)?;
            let classes = lovasz_decomposition(&g, t as usize).colouring.class_count();
            let upper_holds = classes as u64 <= step_value;
            Ok(StepTrial {
                trial_index,
                derived_seed: s.0,
                chi_upper_lovasz: classes,
                upper_holds,
                concluded: upper_holds && lower_certified,
            })
        })
        .collect::<Result<_>>()?;
    let fraction = |f: fn(&StepTrial) -> bool| round_sig(trials.iter().filter(|s| f(s)).count() as f64 / trials.len() as f64);
    Ok(StepReport {
        n,
        p,
        x,
        t,
        step_value,
        eps,
        k_star: cert.map(|c| c.k_star),
        alpha_certified_upper,
        lower_certified,
        upper_fraction: fraction(|s| s.upper_holds),
        success_fraction: fraction(|s| s.concluded),
        trials,
    })
}

/// Checks `chi^t(G(n, p)) = ceil(x)` for `t = round(np/x)` on `trials` samples.
pub fn step_experiment(n: usize, p: f64, x: f64, trials: u64, seed: RngSeed, eps: f64) -> Result<StepReport> {
    step_experiment_indexed(n, p, x, trials, seed, eps, 0)
}

/// Runs a step-mode config: one report per vertex count, indices as in trial mode.
pub fn run_step_experiment(config: &ExperimentConfig) -> Result<Vec<StepReport>> {
    config.validate()?;
    let x = match (config.mode, config.t_spec.x()) {
        (Mode::Step, Some(x)) => x,
        _ => return Err(Error::precondition("step mode needs mode = step and t_spec.x")),
    };
    with_workers(config.workers, || {
        config
            .sizes()
            .into_iter()
            .enumerate()
            .map(|(j, n)| {
                step_experiment_indexed(n, config.p, x, config.trials, config.master_seed, config.eps, j as u64 * config.trials)
            })
            .collect()
    })?
}
