//! Reproducible Monte Carlo campaigns on `G(n, p)`.
//!
//! A campaign is an [`ExperimentConfig`]. Trial `i` samples its graph from
//! `mix_seed(master_seed, i)`, so records depend only on the config and never
//! on worker count or completion order. Outputs are CSV and JSON with floats
//! rounded to twelve significant digits.

mod config;
mod emit;
mod prediction;
mod run;
mod step;

pub use config::{round_half_up, ExperimentConfig, Mode, Sizes, Solver, TSpec};
pub use emit::{
    emit_results, emit_step_results, encode_experiment, encode_step, format_float, output_path, round_sig,
    OutputFormat, SIGNIFICANT_DIGITS, STEP_COLUMNS, TRIAL_COLUMNS,
};
pub use prediction::{theory_curve, TheoryPrediction};
pub use run::{certified_chi_lower, run_experiment, summarize, ExperimentOutcome, FieldStats, SummaryRow, TrialRecord};
pub use step::{run_step_experiment, step_experiment, step_experiment_indexed, StepReport, StepTrial};
