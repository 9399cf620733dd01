use std::path::PathBuf;

use improper_core::colouring::{bounds_report, AlphaValue, BoundsReport, ExactColouring, StrategyRegistry, DEFAULT_CHI_CAP};
use improper_core::io::{read_graph, GraphFormat};
use improper_core::{Graph, Result};
use serde::Serialize;

#[derive(clap::Args)]
#[command(group = clap::ArgGroup::new("mode").args(["exact", "greedy", "bounds", "solver"]))]
pub struct Args {
    /// Graph file (edge list or DIMACS, detected unless --format is given).
    #[arg(long)]
    input: PathBuf,
    /// Degree allowance.
    #[arg(long)]
    t: usize,
    /// Exact alpha^t and chi^t (small graphs only).
    #[arg(long)]
    exact: bool,
    /// Greedy and Lovasz heuristics; any size.
    #[arg(long)]
    greedy: bool,
    /// Lower and upper bounds on chi^t (the default).
    #[arg(long)]
    bounds: bool,
    /// Colour with a named strategy: exact, greedy or lovasz.
    #[arg(long)]
    solver: Option<String>,
    /// Vertex limit for exact chi^t.
    #[arg(long, default_value_t = DEFAULT_CHI_CAP)]
    cap: usize,
    #[arg(long)]
    format: Option<GraphFormat>,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct ColouringReport {
    strategy: &'static str,
    exact: bool,
    class_count: usize,
    assignment: Vec<usize>,
}

#[derive(Serialize)]
struct SolveReport {
    n: usize,
    edges: usize,
    t: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_t: Option<AlphaValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_t_greedy: Option<usize>,
    colourings: Vec<ColouringReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<BoundsReport>,
}

fn colour(registry: &StrategyRegistry, name: &str, g: &Graph, t: usize) -> Result<ColouringReport> {
    let s = registry.colouring(name)?;
    let c = s.colour(g, t)?;
    Ok(ColouringReport {
        strategy: s.name(),
        exact: s.is_exact(),
        class_count: c.class_count(),
        assignment: c.assignment().to_vec(),
    })
}

pub fn run(a: Args) -> Result<()> {
    let g = read_graph(&a.input, a.format)?;
    let t = a.t;
    let mut registry = StrategyRegistry::with_builtins();
    registry.register_colouring(Box::new(ExactColouring { cap: a.cap }));
    let mut report =
        SolveReport { n: g.n(), edges: g.edge_count(), t, alpha_t: None, alpha_t_greedy: None, colourings: vec![], bounds: None };
    if a.exact {
        report.colourings.push(colour(&registry, "exact", &g, t)?);
        report.alpha_t = Some(AlphaValue::Exact(registry.dependent_set("exact")?.find(&g, t)?.len()));
    } else if a.greedy {
        report.alpha_t_greedy = Some(registry.dependent_set("greedy")?.find(&g, t)?.len());
        report.colourings.push(colour(&registry, "greedy", &g, t)?);
        report.colourings.push(colour(&registry, "lovasz", &g, t)?);
    } else if let Some(name) = &a.solver {
        report.colourings.push(colour(&registry, name, &g, t)?);
    } else {
        report.bounds = Some(bounds_report(&g, t));
    }
    if a.json {
        return crate::print_json(&report);
    }
    println!("n = {}  edges = {}  t = {}", report.n, report.edges, t);
    match report.alpha_t {
        Some(AlphaValue::Exact(v)) => println!("alpha_t = {v}"),
        Some(AlphaValue::UpperBound(v)) => println!("alpha_t <= {v}"),
        None => {}
    }
    if let Some(v) = report.alpha_t_greedy {
        println!("alpha_t >= {v} (greedy)");
    }
    for c in &report.colourings {
        if c.exact {
            println!("chi_t = {}", c.class_count);
        } else {
            println!("chi_t <= {} ({})", c.class_count, c.strategy);
        }
    }
    if let Some(b) = &report.bounds {
        print_bounds(b);
    }
    Ok(())
}

fn print_bounds(b: &BoundsReport) {
    println!("max_degree = {}", b.max_degree);
    match b.alpha_t {
        AlphaValue::Exact(v) => println!("alpha_t = {v}"),
        AlphaValue::UpperBound(v) => println!("alpha_t <= {v} (clique cover)"),
    }
    println!("chi_t >= {} (n / alpha_t)", b.chi_lower_ratio);
    if let Some(v) = b.chi_lower_proper {
        println!("chi_t >= {v} (chi / (t + 1))");
    }
    println!("chi_t <= {} ((max_degree + 1) / (t + 1))", b.chi_upper_lovasz);
    if let Some(v) = b.chi_upper_proper {
        println!("chi_t <= {v} (chi)");
    }
    match b.chi_t {
        Some(v) => println!("chi_t = {v}"),
        None if b.lower() == b.upper() => println!("chi_t = {}", b.lower()),
        None => println!("{} <= chi_t <= {}", b.lower(), b.upper()),
    }
}
