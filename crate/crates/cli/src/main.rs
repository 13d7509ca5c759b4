use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use alphatune_cli::config::{Overrides, Scenario};
use alphatune_cli::error::CliError;
use alphatune_cli::run_scenario;

/// Weight-vector tuning experiments for binary linear classifiers.
#[derive(Parser)]
#[command(name = "alphatune", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep alpha for one random weight vector under known class statistics.
    KnownSweep(CommonArgs),
    /// Replicated synthetic-data sweep of alpha for a fitted base classifier.
    SynthSweep(CommonArgs),
    /// Gap between per-realization exact error and its deterministic
    /// equivalent across a dimension ladder.
    DeValidate(CommonArgs),
    /// Gap between the G-estimated and exact error across a dimension ladder.
    GeValidate(CommonArgs),
    /// Tune alpha on user CSV data via the G-estimator (and a test set, if
    /// given).
    Tune(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Config file of `key = value` lines; flags below override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Base seed for all sampling.
    #[arg(long)]
    seed: Option<u64>,
    /// Write the output table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Number of Monte Carlo replications.
    #[arg(long)]
    reps: Option<usize>,
    /// Smallest alpha on the grid.
    #[arg(long, allow_negative_numbers = true)]
    alpha_min: Option<f64>,
    /// Largest alpha on the grid.
    #[arg(long, allow_negative_numbers = true)]
    alpha_max: Option<f64>,
    /// Grid spacing.
    #[arg(long)]
    alpha_step: Option<f64>,
    /// Use the common-covariance estimator/equivalent formulas.
    #[arg(long)]
    assume_common_cov: Option<bool>,
}

fn main() {
    let cli = Cli::parse();
    let (scenario, args) = match &cli.command {
        Command::KnownSweep(a) => (Scenario::KnownSweep, a),
        Command::SynthSweep(a) => (Scenario::SynthSweep, a),
        Command::DeValidate(a) => (Scenario::DeValidate, a),
        Command::GeValidate(a) => (Scenario::GeValidate, a),
        Command::Tune(a) => (Scenario::Tune, a),
    };
    if let Err(e) = run(scenario, args) {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}

fn run(scenario: Scenario, args: &CommonArgs) -> Result<(), CliError> {
    let overrides = Overrides {
        seed: args.seed,
        reps: args.reps,
        alpha_min: args.alpha_min,
        alpha_max: args.alpha_max,
        alpha_step: args.alpha_step,
        assume_common_cov: args.assume_common_cov,
    };
    let table = run_scenario(scenario, args.config.as_deref(), &overrides)?;
    match &args.out {
        Some(path) => std::fs::write(path, table).map_err(|source| CliError::ConfigIo {
            path: path.clone(),
            source,
        })?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(table.as_bytes())
                .map_err(|e| CliError::Numerical(alphatune::Error::Io(e)))?;
        }
    }
    Ok(())
}
