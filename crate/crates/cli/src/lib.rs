//! Command-line front end for `dsq-core`: fuse scenario files, compare
//! strategies and export confidence curves.
//!
//! Exit codes: 0 on success, 2 for invalid input, 3 when the evidence cannot
//! be fused (total conflict, no reliable source, degenerate curve), 1 for
//! output failures.

pub mod export;
pub mod report;
pub mod scenario;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use dsq_core::quantum::{DEFAULT_GRID_SIZE, MIN_GRID_SIZE};
use dsq_core::{
    compare_strategies, confidence_curve, fuse, CurveParams, FusionError, Mixing, QuantumError,
    Strategy,
};
use thiserror::Error;

use crate::scenario::{parse_scenario, Scenario, ScenarioError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OUTPUT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNFUSABLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dsq",
    version,
    about = "Reliability-weighted Dempster-Shafer fusion"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fuse the reports of a scenario with one strategy.
    Fuse(FuseArgs),
    /// Export a confidence curve as CSV.
    Curve(CurveArgs),
    /// Run every strategy on a scenario side by side.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Classical,
    Murphy,
    #[value(alias = "reliability-weighted")]
    Reliability,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Classical => Strategy::Classical,
            StrategyArg::Murphy => Strategy::Murphy,
            StrategyArg::Reliability => Strategy::ReliabilityWeighted,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Args)]
pub struct FuseArgs {
    #[arg(long)]
    pub scenario: PathBuf,
    #[arg(long, value_enum)]
    pub strategy: StrategyArg,
    #[arg(long, value_enum, default_value_t)]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub scenario: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Propagation speed constant.
    #[arg(long, allow_negative_numbers = true)]
    pub c: f64,
    /// Energy-like constant.
    #[arg(long = "L", allow_negative_numbers = true)]
    pub big_l: f64,
    /// Inverse-square potential strength.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub gamma: f64,
    /// Maximum detection range.
    #[arg(long, allow_negative_numbers = true)]
    pub xr: f64,
    /// Number of grid points.
    #[arg(long, default_value_t = DEFAULT_GRID_SIZE)]
    pub points: usize,
    /// Mix J and Y so the amplitude vanishes at the range limit.
    #[arg(long)]
    pub dirichlet: bool,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read scenario `{path}`: {source}")]
    ReadScenario {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("scenario `{path}`: {source}")]
    Scenario {
        path: String,
        #[source]
        source: ScenarioError,
    },
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    Quantum(#[from] QuantumError),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ReadScenario { .. } | CliError::Scenario { .. } => EXIT_INPUT,
            CliError::Fusion(e) => fusion_exit_code(e),
            CliError::Quantum(e) => quantum_exit_code(e),
            CliError::Output(_) => EXIT_OUTPUT,
        }
    }
}

fn quantum_exit_code(e: &QuantumError) -> i32 {
    match e {
        QuantumError::DegenerateCurve(_) => EXIT_UNFUSABLE,
        _ => EXIT_INPUT,
    }
}

fn fusion_exit_code(e: &FusionError) -> i32 {
    match e {
        e if e.is_total_conflict() => EXIT_UNFUSABLE,
        FusionError::AllUnreliable { .. } => EXIT_UNFUSABLE,
        FusionError::Curve { source, .. } => quantum_exit_code(source),
        _ => EXIT_INPUT,
    }
}

pub fn load_scenario(path: &Path) -> Result<Scenario, CliError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::ReadScenario {
        path: display.clone(),
        source,
    })?;
    parse_scenario(&text).map_err(|source| CliError::Scenario {
        path: display,
        source,
    })
}

fn print_json<W: Write>(out: &mut W, value: &serde_json::Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn run_fuse<W: Write>(args: &FuseArgs, out: &mut W) -> Result<(), CliError> {
    let scenario = load_scenario(&args.scenario)?;
    let result = fuse(&scenario.reports, args.strategy.into())?;
    match args.output {
        OutputFormat::Table => write!(out, "{}", report::fusion_table(&result))?,
        OutputFormat::Json => print_json(out, &report::fusion_json(&result))?,
    }
    Ok(())
}

/// Prints all rows; fails with the first row's error only when every row failed.
fn run_compare<W: Write>(args: &CompareArgs, out: &mut W) -> Result<(), CliError> {
    let scenario = load_scenario(&args.scenario)?;
    let rows = compare_strategies(&scenario.reports);
    match args.output {
        OutputFormat::Table => write!(out, "{}", report::comparison_table(&scenario.frame, &rows))?,
        OutputFormat::Json => print_json(out, &report::comparison_json(&rows))?,
    }
    if rows.iter().any(|r| r.result.is_ok()) {
        return Ok(());
    }
    let first = rows
        .into_iter()
        .next()
        .and_then(|r| r.result.err())
        .unwrap_or(FusionError::NoReports);
    Err(first.into())
}

fn run_curve<W: Write>(args: &CurveArgs, out: &mut W) -> Result<(), CliError> {
    let mixing = if args.dirichlet {
        Mixing::Dirichlet
    } else {
        Mixing::Unweighted
    };
    let params = CurveParams::new(args.c, args.big_l, args.gamma, args.xr)?.with_mixing(mixing);
    if args.points < MIN_GRID_SIZE {
        return Err(QuantumError::GridTooSmall {
            requested: args.points,
            minimum: MIN_GRID_SIZE,
        }
        .into());
    }
    let curve = confidence_curve(&params, args.points)?;
    match &args.out {
        Some(path) => {
            let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
            export::write_curve_csv(&curve, &mut file)?;
            file.flush()?;
        }
        None => export::write_curve_csv(&curve, out)?,
    }
    Ok(())
}

/// Runs a parsed command and returns the process exit code.
pub fn run<W: Write, E: Write>(cli: &Cli, out: &mut W, err: &mut E) -> i32 {
    let outcome = match &cli.command {
        Command::Fuse(a) => run_fuse(a, out),
        Command::Curve(a) => run_curve(a, out),
        Command::Compare(a) => run_compare(a, out),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
