use std::path::PathBuf;

use improper_core::io::{format_graph, write_graph, GraphFormat};
use improper_core::{Graph, Result, RngSeed};

#[derive(clap::Args)]
#[command(group = clap::ArgGroup::new("model").required(true).args(["p", "m"]))]
pub struct Args {
    /// Vertex count.
    #[arg(long)]
    n: usize,
    /// Edge probability for G(n, p).
    #[arg(long)]
    p: Option<f64>,
    /// Edge count for G(n, m).
    #[arg(long)]
    m: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// edgelist or dimacs.
    #[arg(long, default_value = "edgelist")]
    format: GraphFormat,
}

pub fn run(a: Args) -> Result<()> {
    let seed = RngSeed(a.seed);
    let g = match (a.p, a.m) {
        (Some(p), _) => Graph::sample_gnp(a.n, p, seed)?,
        (None, Some(m)) => Graph::sample_gnm(a.n, m, seed)?,
        (None, None) => unreachable!("clap enforces --p or --m"),
    };
    match a.out {
        Some(path) => write_graph(&path, &g, a.format),
        None => {
            print!("{}", format_graph(&g, a.format));
            Ok(())
        }
    }
}
