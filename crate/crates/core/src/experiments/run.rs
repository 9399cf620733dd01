use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{ExperimentConfig, Solver};
use super::emit::round_sig;
use super::prediction::{theory_curve, TheoryPrediction};
use crate::colouring::{ExactColouring, StrategyRegistry};
use crate::theory::{first_moment_threshold_k, TheoryParams};
use crate::{mix_seed, Error, Graph, Result};

/// One sampled graph and the solver outputs on it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial_index: u64,
    pub derived_seed: u64,
    pub n: usize,
    pub p: f64,
    pub t: u64,
    pub alpha_hat: usize,
    /// Whether `alpha_hat` is the exact t-dependence number rather than a greedy lower bound.
    pub alpha_exact_flag: bool,
    pub chi_upper_greedy: usize,
    pub chi_upper_lovasz: usize,
    /// `ceil(n / (k_star - 1))` from the first-moment certificate; 1 when no certificate exists.
    pub chi_lower_ratio: u64,
    /// Zero unless timings are enabled.
    pub wall_time_ms: f64,
    /// Exact `chi^t`, when the exact solver ran.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_exact: Option<usize>,
}

/// Per-field statistics over the records of one vertex count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldStats {
    pub alpha_hat: f64,
    pub alpha_exact_flag: f64,
    pub chi_upper_greedy: f64,
    pub chi_upper_lovasz: f64,
    pub chi_lower_ratio: f64,
    pub wall_time_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_exact: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub n: usize,
    pub p: f64,
    pub t: u64,
    pub trials: usize,
    pub mean: FieldStats,
    /// Sample standard deviation (divisor `trials - 1`); zero for a single trial.
    pub stddev: FieldStats,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentOutcome {
    pub records: Vec<TrialRecord>,
    pub summary: Vec<SummaryRow>,
    /// Keyed by vertex count; empty when `p` is 0 or 1.
    pub theory: BTreeMap<usize, TheoryPrediction>,
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    let k = values.len() as f64;
    if values.is_empty() {
        return (0.0, 0.0);
    }
    let mean = values.iter().sum::<f64>() / k;
    let var = if values.len() > 1 {
        values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0)
    } else {
        0.0
    };
    (round_sig(mean), round_sig(var.sqrt()))
}

/// Mean and standard deviation of every numeric field, in record order.
pub fn summarize(records: &[TrialRecord]) -> (FieldStats, FieldStats) {
    let column = |f: &dyn Fn(&TrialRecord) -> f64| mean_std(&records.iter().map(f).collect::<Vec<_>>());
    let alpha = column(&|r| r.alpha_hat as f64);
    let flag = column(&|r| f64::from(u8::from(r.alpha_exact_flag)));
    let greedy = column(&|r| r.chi_upper_greedy as f64);
    let lovasz = column(&|r| r.chi_upper_lovasz as f64);
    let ratio = column(&|r| r.chi_lower_ratio as f64);
    let wall = column(&|r| r.wall_time_ms);
    let exact: Option<Vec<f64>> = records.iter().map(|r| r.chi_exact.map(|c| c as f64)).collect();
    let exact = exact.filter(|v| !v.is_empty()).map(|v| mean_std(&v));
    let pick = |i: usize| {
        let get = |s: (f64, f64)| if i == 0 { s.0 } else { s.1 };
        FieldStats {
            alpha_hat: get(alpha),
            alpha_exact_flag: get(flag),
            chi_upper_greedy: get(greedy),
            chi_upper_lovasz: get(lovasz),
            chi_lower_ratio: get(ratio),
            wall_time_ms: get(wall),
            chi_exact: exact.map(get),
        }
    };
    (pick(0), pick(1))
}

/// `ceil(n / alpha_bound)` with the first-moment certified `alpha_bound`.
pub fn certified_chi_lower(n: usize, p: f64, t: u64, eps: f64) -> Result<u64> {
    if !(p > 0.0 && p < 1.0) {
        return Ok(1);
    }
    let params = TheoryParams::new(p)?;
    Ok(first_moment_threshold_k(n as u64, t, eps, &params)?.map_or(1, |c| c.chi_lower(n as u64)))
}

/// Runs `f` on a pool of `workers` threads, or on the global pool.
pub(crate) fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(f()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::precondition(format!("cannot start {w} workers: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

struct Job {
    trial_index: u64,
    n: usize,
    t: u64,
    chi_lower_ratio: u64,
}

fn run_trial(job: &Job, config: &ExperimentConfig, registry: &StrategyRegistry) -> Result<TrialRecord> {
    let start = Instant::now();
    let seed = mix_seed(config.master_seed, job.trial_index);
    let g = Graph::sample_gnp(job.n, config.p, seed)?;
    let t = job.t as usize;
    let alpha = registry.dependent_set(config.solver.alpha_strategy(job.n))?;
    let alpha_hat = alpha.find(&g, t)?.len();
    let chi_upper_greedy = registry.colouring("greedy")?.colour(&g, t)?.class_count();
    let chi_upper_lovasz = registry.colouring("lovasz")?.colour(&g, t)?.class_count();
    let chi_exact = if config.solver != Solver::Greedy && job.n <= config.chi_cap {
        Some(registry.colouring("exact")?.colour(&g, t)?.class_count())
    } else {
        None
    };
    let wall_time_ms = if config.timings { round_sig(start.elapsed().as_secs_f64() * 1e3) } else { 0.0 };
    Ok(TrialRecord {
        trial_index: job.trial_index,
        derived_seed: seed.0,
        n: job.n,
        p: config.p,
        t: job.t,
        alpha_hat,
        alpha_exact_flag: alpha.is_exact(),
        chi_upper_greedy,
        chi_upper_lovasz,
        chi_lower_ratio: job.chi_lower_ratio,
        wall_time_ms,
        chi_exact,
    })
}

/// Samples `trials` graphs per vertex count and runs the configured solvers.
///
/// Trial `i` of the `j`-th vertex count has index `j * trials + i` and seed
/// `mix_seed(master_seed, index)`. Records are returned in index order whatever
/// the worker count.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutcome> {
    config.validate()?;
    let mut registry = StrategyRegistry::with_builtins();
    registry.register_colouring(Box::new(ExactColouring { cap: config.chi_cap }));
    let mut jobs = Vec::new();
    let mut theory = BTreeMap::new();
    for (j, n) in config.sizes().into_iter().enumerate() {
        let t = config.t_spec.resolve(n, config.p);
        let chi_lower_ratio = certified_chi_lower(n, config.p, t, config.eps)?;
        if config.p > 0.0 && config.p < 1.0 {
            theory.insert(n, theory_curve(n, config.p, t, config.eps, config.t_spec.x())?);
        }
        for i in 0..config.trials {
            jobs.push(Job { trial_index: j as u64 * config.trials + i, n, t, chi_lower_ratio });
        }
    }
    let records = with_workers(config.workers, || {
        jobs.par_iter().map(|job| run_trial(job, config, &registry)).collect::<Result<Vec<_>>>()
    })??;
    let summary = records
        .chunks(config.trials as usize)
        .map(|group| {
            let (mean, stddev) = summarize(group);
            SummaryRow { n: group[0].n, p: config.p, t: group[0].t, trials: group.len(), mean, stddev }
        })
        .collect();
    Ok(ExperimentOutcome { records, summary, theory })
}

#[cfg(test)]
mod tests {
    use super::super::config::{Sizes, TSpec};
    use super::*;
    use crate::RngSeed;

    fn config(n: usize, p: f64, t: u64, trials: u64, solver: Solver) -> ExperimentConfig {
        ExperimentConfig {
            n: Sizes::One(n),
            p,
            t_spec: TSpec::Absolute(t),
            trials,
            master_seed: RngSeed(11),
            solver,
            eps: 0.01,
            output: None,
            mode: Default::default(),
            workers: None,
            timings: false,
            chi_cap: 24,
        }
    }

    #[test]
    fn complete_graph_trial() {
        let out = run_experiment(&config(5, 1.0, 1, 1, Solver::Exact)).unwrap();
        assert_eq!(out.records.len(), 1);
        let r = &out.records[0];
        assert_eq!(r.chi_exact, Some(3));
        assert_eq!(r.alpha_hat, 2);
        assert!(r.alpha_exact_flag);
        assert_eq!(r.chi_lower_ratio, 1);
        assert!(out.theory.is_empty());
    }

    #[test]
    fn indices_seeds_and_summary() {
        let mut c = config(20, 0.5, 1, 4, Solver::Both);
        c.n = Sizes::Many(vec![12, 20]);
        let out = run_experiment(&c).unwrap();
        let idx: Vec<u64> = out.records.iter().map(|r| r.trial_index).collect();
        assert_eq!(idx, (0..8).collect::<Vec<_>>());
        for r in &out.records {
            assert_eq!(r.derived_seed, mix_seed(RngSeed(11), r.trial_index).0);
            assert!(r.chi_exact.unwrap() <= r.chi_upper_greedy);
            assert!(r.chi_exact.unwrap() <= r.chi_upper_lovasz);
            assert_eq!(r.wall_time_ms, 0.0);
        }
        assert_eq!(out.summary.len(), 2);
        assert_eq!(out.summary[1].n, 20);
        let mean = out.records[4..].iter().map(|r| r.alpha_hat as f64).sum::<f64>() / 4.0;
        assert!((out.summary[1].mean.alpha_hat - mean).abs() < 1e-9);
        assert_eq!(out.theory.keys().copied().collect::<Vec<_>>(), vec![12, 20]);
    }

    #[test]
    fn worker_count_does_not_change_records() {
        let mut c = config(30, 0.5, 2, 6, Solver::Both);
        c.workers = Some(1);
        let a = run_experiment(&c).unwrap();
        c.workers = Some(3);
        assert_eq!(a, run_experiment(&c).unwrap());
    }

    #[test]
    fn stddev_of_single_value_is_zero() {
        assert_eq!(mean_std(&[4.0]), (4.0, 0.0));
        assert_eq!(mean_std(&[1.0, 3.0]).1, round_sig(2f64.sqrt()));
    }
}
