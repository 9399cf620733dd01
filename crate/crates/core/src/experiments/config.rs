use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::colouring::{ALPHA_EXACT_CAP, DEFAULT_CHI_CAP};
use crate::error::ConfigIssue;
use crate::{Error, Result, RngSeed};

/// One vertex count or a list of them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Sizes {
    One(usize),
    Many(Vec<usize>),
}

impl Sizes {
    pub fn to_vec(&self) -> Vec<usize> {
        match self {
            Sizes::One(n) => vec![*n],
            Sizes::Many(ns) => ns.clone(),
        }
    }
}

/// How the degree allowance `t` is chosen for each `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum TSpec {
    Absolute(u64),
    /// `t = round(tau * ln n)`.
    Tau(f64),
    /// `t = round(n p / x)`.
    X(f64),
}

/// Rounds half up; `v` must be non-negative.
pub fn round_half_up(v: f64) -> u64 {
    (v + 0.5).floor() as u64
}

impl TSpec {
    /// The realized integer `t` for a graph on `n` vertices.
    pub fn resolve(&self, n: usize, p: f64) -> u64 {
        match *self {
            TSpec::Absolute(t) => t,
            TSpec::Tau(tau) => round_half_up(tau * (n as f64).ln()),
            TSpec::X(x) => round_half_up(n as f64 * p / x),
        }
    }

    pub fn x(&self) -> Option<f64> {
        match *self {
            TSpec::X(x) => Some(x),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Solver {
    /// Exact `alpha^t` (and exact `chi^t` up to `chi_cap`); every `n` must be within the exact cap.
    Exact,
    /// Greedy `alpha^t` only.
    Greedy,
    /// Exact where the caps allow, greedy elsewhere.
    #[default]
    Both,
}

impl Solver {
    /// Name in the dependent-set strategy registry used for `n` vertices.
    pub(crate) fn alpha_strategy(&self, n: usize) -> &'static str {
        match self {
            Solver::Exact => "exact",
            Solver::Greedy => "greedy",
            Solver::Both if n <= ALPHA_EXACT_CAP => "exact",
            Solver::Both => "greedy",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Per-trial solver records and summary statistics.
    #[default]
    Trials,
    /// The `chi^t = ceil(x)` step check; requires `t_spec.x`.
    Step,
}

fn default_eps() -> f64 {
    0.01
}

fn default_chi_cap() -> usize {
    DEFAULT_CHI_CAP
}

/// A Monte Carlo campaign, read from a single JSON document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub n: Sizes,
    pub p: f64,
    pub t_spec: TSpec,
    pub trials: u64,
    pub master_seed: RngSeed,
    #[serde(default)]
    pub solver: Solver,
    /// Failure budget of the first-moment certificate.
    #[serde(default = "default_eps")]
    pub eps: f64,
    /// Output base path; `.csv` and `.json` are appended.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub mode: Mode,
    /// Worker threads; defaults to the number of CPUs. Never affects results.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub workers: Option<usize>,
    /// Record wall time per trial. Off by default so that outputs are reproducible.
    #[serde(default)]
    pub timings: bool,
    /// Largest `n` for which exact `chi^t` is computed.
    #[serde(default = "default_chi_cap")]
    pub chi_cap: usize,
}

impl ExperimentConfig {
    /// Parses a JSON config without validating field values. Schema errors
    /// carry the JSON path of the offending field.
    pub fn parse_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let path = if path == "." { "$".to_string() } else { format!("$.{path}") };
            Error::Config(vec![ConfigIssue { path, message: e.into_inner().to_string() }])
        })
    }

    /// Parses and validates a JSON config.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let config = Self::parse_json(text)?;
        config.validate()?;
        Ok(config)
    }

    /// Reads a config file; field values are not validated.
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse_json(&text)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.n.to_vec()
    }

    /// Checks every field, collecting all problems rather than stopping at the first.
    /// Exact solving beyond the cap is reported as [`Error::CapExceeded`].
    pub fn validate(&self) -> Result<()> {
        let mut issues = Vec::new();
        let mut issue = |path: &str, message: String| issues.push(ConfigIssue { path: path.into(), message });
        let sizes = self.sizes();
        if sizes.is_empty() {
            issue("$.n", "at least one vertex count is required".into());
        }
        for (i, &n) in sizes.iter().enumerate() {
            if n < 3 {
                let path = match self.n {
                    Sizes::One(_) => "$.n".to_string(),
                    Sizes::Many(_) => format!("$.n[{i}]"),
                };
                issue(&path, format!("vertex count must be at least 3, got {n}"));
            }
        }
        let p_open = self.p > 0.0 && self.p < 1.0;
        if !(0.0..=1.0).contains(&self.p) {
            issue("$.p", format!("probability must lie in [0, 1], got {}", self.p));
        } else if self.mode == Mode::Step && !p_open {
            issue("$.p", format!("step mode needs 0 < p < 1, got {}", self.p));
        }
        match self.t_spec {
            TSpec::Tau(tau) if !(tau >= 0.0 && tau.is_finite()) => {
                issue("$.t_spec.tau", format!("tau must be finite and non-negative, got {tau}"))
            }
            TSpec::X(x) if !(x > 0.0 && x.is_finite()) => {
                issue("$.t_spec.x", format!("x must be finite and positive, got {x}"))
            }
            TSpec::X(x) if self.mode == Mode::Step && x.fract() == 0.0 => {
                issue("$.t_spec.x", format!("x must not be an integer in step mode, got {x}"))
            }
            TSpec::Absolute(_) | TSpec::Tau(_) if self.mode == Mode::Step => {
                issue("$.t_spec", "step mode needs t_spec.x".into())
            }
            _ => {}
        }
        if self.trials == 0 {
            issue("$.trials", "at least one trial is required".into());
        }
        if !(self.eps > 0.0 && self.eps <= 1.0) {
            issue("$.eps", format!("eps must lie in (0, 1], got {}", self.eps));
        }
        if self.workers == Some(0) {
            issue("$.workers", "worker count must be at least 1".into());
        }
        if !issues.is_empty() {
            return Err(Error::Config(issues));
        }
        if self.solver == Solver::Exact && self.mode == Mode::Trials {
            if let Some(&n) = sizes.iter().find(|&&n| n > ALPHA_EXACT_CAP) {
                return Err(Error::CapExceeded { what: "exact t-dependence number", n, cap: ALPHA_EXACT_CAP });
            }
        }
        Ok(())
    }
}
