use improper_core::experiments::round_sig;
use improper_core::theory::{kappa_p, kappa_sparse, lambda_star, TheoryParams};
use improper_core::{Error, Result};
use serde::Serialize;

#[derive(clap::Args)]
#[command(group = clap::ArgGroup::new("scale").required(true).args(["tau", "t"]))]
pub struct Args {
    /// Edge probability, 0 < p < 1. Required unless --sparse is given with --tau.
    #[arg(long)]
    p: Option<f64>,
    /// tau = t / ln n (dense) or t / ln d (sparse, d = np).
    #[arg(long)]
    tau: Option<f64>,
    /// Absolute degree allowance; needs --n.
    #[arg(long, requires = "n")]
    t: Option<u64>,
    /// Vertex count; with --tau it adds predicted scales.
    #[arg(long)]
    n: Option<usize>,
    /// Use the sparse-regime threshold kappa(tau).
    #[arg(long)]
    sparse: bool,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct LambdaSample {
    x: f64,
    value: f64,
}

#[derive(Serialize)]
struct DenseReport {
    p: f64,
    tau: f64,
    kappa_p: f64,
    lambda_star: Vec<LambdaSample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_predicted: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_predicted: Option<f64>,
}

#[derive(Serialize)]
struct SparseReport {
    tau: f64,
    kappa: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<f64>,
    /// `d / (kappa ln d)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_lower_scale: Option<f64>,
}

fn require_p(p: Option<f64>) -> Result<TheoryParams> {
    let p = p.ok_or_else(|| Error::Precondition("--p is required".into()))?;
    TheoryParams::new(p)
}

pub fn run(a: Args) -> Result<()> {
    if let Some(n) = a.n {
        if n < 3 {
            return Err(Error::Precondition(format!("--n must be at least 3, got {n}")));
        }
    }
    if a.sparse {
        sparse(&a)
    } else {
        dense(&a)
    }
}

fn dense(a: &Args) -> Result<()> {
    let params = require_p(a.p)?;
    let tau = match (a.tau, a.t, a.n) {
        (Some(tau), _, _) => tau,
        (None, Some(t), Some(n)) => t as f64 / (n as f64).ln(),
        _ => unreachable!("clap enforces --tau or --t with --n"),
    };
    let kappa = kappa_p(tau, &params)?;
    let p = params.p();
    let lambda = [0.0, 0.25, 0.5, 0.75, 1.0]
        .map(|f| LambdaSample { x: round_sig(f * p), value: round_sig(lambda_star(f * p, &params)) });
    let scale = a.n.map(|n| kappa * (n as f64).ln());
    let report = DenseReport {
        p,
        tau: round_sig(tau),
        kappa_p: round_sig(kappa),
        lambda_star: lambda.into(),
        n: a.n,
        alpha_predicted: scale.map(round_sig),
        chi_predicted: a.n.zip(scale).map(|(n, s)| round_sig(n as f64 / s)),
    };
    if a.json {
        return crate::print_json(&report);
    }
    println!("p = {}  tau = {}", report.p, report.tau);
    for s in &report.lambda_star {
        println!("lambda_star({}) = {}", s.x, s.value);
    }
    println!("kappa_p = {}", report.kappa_p);
    match (report.n, report.alpha_predicted, report.chi_predicted) {
        (Some(n), Some(alpha), Some(chi)) => {
            println!("n = {n}");
            println!("alpha_t ~ kappa_p ln n = {alpha}");
            println!("chi_t ~ n / (kappa_p ln n) = {chi}");
        }
        _ => {
            println!("alpha_t ~ {} ln n", report.kappa_p);
            println!("chi_t ~ n / ({} ln n)", report.kappa_p);
        }
    }
    Ok(())
}

fn sparse(a: &Args) -> Result<()> {
    let d = match (a.n, a.p) {
        (Some(n), Some(p)) => {
            TheoryParams::new(p)?;
            Some(n as f64 * p)
        }
        _ => None,
    };
    if d.is_some_and(|d| d <= 1.0) {
        return Err(Error::Precondition("the average degree np must exceed 1".into()));
    }
    let tau = match (a.tau, a.t, d) {
        (Some(tau), _, _) => tau,
        (None, Some(t), Some(d)) => t as f64 / d.ln(),
        _ => return Err(Error::Precondition("--sparse with --t needs --n and --p".into())),
    };
    let kappa = kappa_sparse(tau)?;
    let report = SparseReport {
        tau: round_sig(tau),
        kappa: round_sig(kappa),
        d: d.map(round_sig),
        chi_lower_scale: d.map(|d| round_sig(d / (kappa * d.ln()))),
    };
    if a.json {
        return crate::print_json(&report);
    }
    println!("tau = {}", report.tau);
    println!("kappa = {}", report.kappa);
    if let (Some(d), Some(chi)) = (report.d, report.chi_lower_scale) {
        println!("d = np = {d}");
        println!("chi_t >~ d / (kappa ln d) = {chi}");
    }
    Ok(())
}
