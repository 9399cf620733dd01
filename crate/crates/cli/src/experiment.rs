use std::path::PathBuf;

use improper_core::experiments::{
    emit_results, emit_step_results, run_experiment, run_step_experiment, ExperimentConfig, ExperimentOutcome, Mode,
    Sizes, Solver, StepReport,
};
use improper_core::{Error, Result, RngSeed};

const PRECEDENCE: &str = "Flags override the matching config fields; fields absent from both take their \
documented defaults (solver both, eps 0.01, chi_cap 24, mode trials, timings off, one worker per CPU). \
Outputs are written to <out>.csv and <out>.json only after every trial succeeded.";

#[derive(clap::Args)]
#[command(after_long_help = PRECEDENCE)]
pub struct Args {
    /// JSON experiment config.
    #[arg(long)]
    config: PathBuf,
    /// Vertex counts (comma separated).
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    trials: Option<u64>,
    /// Master seed.
    #[arg(long)]
    seed: Option<u64>,
    /// exact, greedy or both.
    #[arg(long, value_parser = parse_solver)]
    solver: Option<Solver>,
    #[arg(long)]
    eps: Option<f64>,
    /// Output base path.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    workers: Option<usize>,
    /// Record per-trial wall time (makes outputs non-reproducible).
    #[arg(long)]
    timings: bool,
}

fn parse_solver(s: &str) -> std::result::Result<Solver, String> {
    serde_json::from_value(serde_json::Value::String(s.into()))
        .map_err(|_| format!("unknown solver `{s}`; expected exact, greedy or both"))
}

fn apply_overrides(c: &mut ExperimentConfig, a: Args) {
    if let Some(n) = a.n {
        c.n = if n.len() == 1 { Sizes::One(n[0]) } else { Sizes::Many(n) };
    }
    if let Some(p) = a.p {
        c.p = p;
    }
    if let Some(trials) = a.trials {
        c.trials = trials;
    }
    if let Some(seed) = a.seed {
        c.master_seed = RngSeed(seed);
    }
    if let Some(solver) = a.solver {
        c.solver = solver;
    }
    if let Some(eps) = a.eps {
        c.eps = eps;
    }
    if a.out.is_some() {
        c.output = a.out;
    }
    if a.workers.is_some() {
        c.workers = a.workers;
    }
    c.timings |= a.timings;
}

pub fn run(a: Args) -> Result<()> {
    let mut config = ExperimentConfig::read(&a.config)?;
    apply_overrides(&mut config, a);
    config.validate()?;
    let out = config.output.clone().ok_or_else(|| {
        Error::Config(vec![improper_core::error::ConfigIssue {
            path: "$.output".into(),
            message: "an output base path is required (config field or --out)".into(),
        }])
    })?;
    let written = match config.mode {
        Mode::Trials => {
            let outcome = run_experiment(&config)?;
            print_summary(&outcome);
            emit_results(&outcome, &out)?
        }
        Mode::Step => {
            let reports = run_step_experiment(&config)?;
            print_step(&reports);
            emit_step_results(&reports, &out)?
        }
    };
    for path in written {
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn print_summary(o: &ExperimentOutcome) {
    for s in &o.summary {
        println!("n = {}  p = {}  t = {}  trials = {}", s.n, s.p, s.t, s.trials);
        let (m, d) = (&s.mean, &s.stddev);
        println!("  alpha_hat         {} +- {}  (exact fraction {})", m.alpha_hat, d.alpha_hat, m.alpha_exact_flag);
        println!("  chi_upper_greedy  {} +- {}", m.chi_upper_greedy, d.chi_upper_greedy);
        println!("  chi_upper_lovasz  {} +- {}", m.chi_upper_lovasz, d.chi_upper_lovasz);
        println!("  chi_lower_ratio   {}", m.chi_lower_ratio);
        if let (Some(m), Some(d)) = (m.chi_exact, d.chi_exact) {
            println!("  chi_exact         {m} +- {d}");
        }
        if let Some(th) = o.theory.get(&s.n) {
            let k = th.k_star.map_or("none".to_string(), |k| k.to_string());
            println!(
                "  theory: alpha_predicted {}  chi_predicted {}  k_star {}",
                th.alpha_predicted, th.chi_predicted, k
            );
        }
    }
}

fn print_step(reports: &[StepReport]) {
    for r in reports {
        let k = r.k_star.map_or("none".to_string(), |k| k.to_string());
        println!("n = {}  p = {}  x = {}  t = {}  step = {}", r.n, r.p, r.x, r.t, r.step_value);
        println!("  k_star {k}  lower certified {}", r.lower_certified);
        println!("  lovasz <= step in {} of trials; chi_t = step concluded in {}", r.upper_fraction, r.success_fraction);
    }
}
