use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use oew_cli::format::render_report;
use oew_cli::selftest;
use oew_cli::state_file::read_state;
use oew_cli::sweep::{sweep_to_file, Family, SweepConfig};

/// Lower bounds on the witness-based entanglement measure of bipartite states.
#[derive(Debug, Parser)]
#[command(name = "oew", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate every applicable bound on a JSON state file.
    ///
    /// Exit status: 0 entanglement detected, 1 inconclusive, 2 input error.
    Bound { path: PathBuf },
    /// Sweep a parametrized family over a grid of `a` and write CSV.
    Sweep {
        /// pure2x2, mixed2x2, pure3x3 or mixed3x3
        #[arg(long)]
        family: String,
        /// White-noise weight, required for the mixed families.
        #[arg(long)]
        x: Option<f64>,
        #[arg(long, default_value_t = 0.0)]
        a_min: f64,
        #[arg(long, default_value_t = 2.0)]
        a_max: f64,
        #[arg(long, default_value_t = 201)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the seeded property self-test. Exit status 0 iff every suite passes.
    Selftest {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

const INPUT_ERROR: u8 = 2;

fn bound(path: &Path) -> anyhow::Result<ExitCode> {
    let rho = read_state(path).with_context(|| format!("reading {}", path.display()))?;
    let report = oew_core::bounds::evaluate(&rho);
    print!("{}", render_report(&report));
    Ok(ExitCode::from(if report.entangled { 0 } else { 1 }))
}

fn sweep(config: SweepConfig, out: &Path) -> anyhow::Result<ExitCode> {
    sweep_to_file(&config, out).with_context(|| format!("sweep to {}", out.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Bound { path } => bound(&path),
        Command::Sweep {
            family,
            x,
            a_min,
            a_max,
            steps,
            out,
        } => {
            let family: Family = family.parse()?;
            sweep(
                SweepConfig {
                    family,
                    x,
                    a_min,
                    a_max,
                    steps,
                },
                &out,
            )
        }
        Command::Selftest { seed, samples } => {
            anyhow::ensure!(samples >= 1, "--samples must be at least 1");
            let report = selftest::run(seed, samples);
            print!("{}", report.render());
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
