//! `improper`: command-line front end for t-improper colouring of random graphs.

mod experiment;
mod sample;
mod solve;
mod theory;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "improper", version, about = "t-improper colouring of random graphs: theory, solvers and experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the rate function and the threshold functions.
    Theory(theory::Args),
    /// Sample a G(n, p) or G(n, m) graph.
    Sample(sample::Args),
    /// Compute t-dependence and t-improper chromatic numbers of a graph file.
    Solve(solve::Args),
    /// Run a Monte Carlo campaign from a JSON config.
    Experiment(experiment::Args),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Theory(a) => theory::run(a),
        Command::Sample(a) => sample::run(a),
        Command::Solve(a) => solve::run(a),
        Command::Experiment(a) => experiment::run(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let improper_core::Error::CapExceeded { .. } = e {
                eprintln!("hint: rerun with --greedy or --bounds");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

/// Prints `value` as pretty JSON on stdout.
fn print_json<T: serde::Serialize>(value: &T) -> improper_core::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => other.map_err(|source| improper_core::Error::Io { path: "<stdout>".into(), source }),
    }
}
