use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qwalk_cli::report::{self, DistReport, SweepReport};
use qwalk_cli::{
    run_check, run_dist, run_sweep, CliError, DistConfig, Format, Metric, Result, SweepConfig,
    Walk, DEFAULT_TOL,
};

#[derive(Parser)]
#[command(
    name = "qwalk",
    version,
    about = "Exact quantum and classical walk distributions on the line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the position distribution of one walk at one time
    Dist(DistArgs),
    /// Compare a walk against its limit law over several times
    Sweep(SweepArgs),
    /// Run one of the built-in oracle checks
    Check(CheckArgs),
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DistArgs {
    #[arg(long, value_enum)]
    walk: Walk,
    #[arg(long)]
    time: f64,
    /// Coin angle in (0, pi/2]; required for ctqw-theta and dtqw
    #[arg(long, allow_negative_numbers = true)]
    theta: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    walk: Walk,
    #[arg(long, value_delimiter = ',', required = true)]
    times: Vec<f64>,
    #[arg(long, allow_negative_numbers = true)]
    theta: Option<f64>,
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    metrics: Vec<Metric>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CheckArgs {
    /// propagator, charfn, binomial, normalization or addition
    #[arg(long)]
    name: String,
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}

fn dist(args: DistArgs) -> Result<()> {
    let config = DistConfig {
        walk: args.walk,
        time: args.time,
        theta: args.theta,
        tol: args.tol,
    };
    let d = run_dist(config.walk, config.time, config.theta, config.tol)?;
    let rows = report::dist_rows(&d);
    let bytes = match args.output.format {
        Format::Csv => report::dist_csv(&rows)?,
        Format::Json => report::dist_json(&DistReport { config, rows })?,
    };
    emit(args.output.out.as_deref(), &bytes)
}

fn sweep(args: SweepArgs) -> Result<()> {
    let config = SweepConfig {
        walk: args.walk,
        times: args.times,
        theta: args.theta,
        metrics: args.metrics,
        tol: args.tol,
        format: args.output.format,
        out: args.output.out,
    };
    let rows = run_sweep(&config)?;
    let bytes = match config.format {
        Format::Csv => report::sweep_csv(&rows)?,
        Format::Json => report::sweep_json(&SweepReport {
            config: config.clone(),
            rows,
        })?,
    };
    emit(config.out.as_deref(), &bytes)
}

fn check(args: CheckArgs) -> Result<()> {
    let report = run_check(&args.name)?;
    println!("{report}");
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Numerical(format!("check `{}` failed", args.name)))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Dist(a) => dist(a),
        Command::Sweep(a) => sweep(a),
        Command::Check(a) => check(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qwalk: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
