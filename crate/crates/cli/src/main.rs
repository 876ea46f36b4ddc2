//! `scatter` — command-line front end: verification suite runner, amplitude
//! and cross-section tables, and parameter sweeps with machine-readable
//! output.
//!
//! Exit status contract: 0 success, 1 gated check failure, 2 configuration
//! error (including malformed config files and CLI usage errors).

mod config;
mod grid;
mod output;
mod sweep;
mod table;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::config::ConfigMap;
use crate::grid::GridSpec;
use crate::output::{write_output, Format};

#[derive(Debug)]
pub enum CliError {
    /// Invalid configuration: exit 2.
    Config(String),
    /// A gated verification check failed: exit 1.
    CheckFailure(String),
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }
}

impl From<scatter_core::Error> for CliError {
    fn from(err: scatter_core::Error) -> Self {
        CliError::Config(err.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "scatter",
    version,
    about = "Relativistic two-body scattering: verification, amplitudes, cross sections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the algebraic verification suites (commutators, Casimirs,
    /// unitarity, recurrence, intertwining)
    Verify(VerifyArgs),
    /// Tabulate the scattering amplitude over a theta grid
    Amplitude(AmplitudeArgs),
    /// Tabulate cross sections over a theta grid (equal masses)
    Xsec(XsecArgs),
    /// Sweep k, alpha or tau; one json-lines record per point
    Sweep(SweepArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Representation parameter tau
    #[arg(long)]
    tau: Option<f64>,
    /// Truncation l_max (>= 2)
    #[arg(long)]
    lmax: Option<u32>,
    /// Override a named tolerance, NAME=VALUE (repeatable)
    #[arg(long = "tol", value_name = "NAME=VAL")]
    tol: Vec<String>,
}

#[derive(Args)]
struct AmplitudeArgs {
    /// Interaction strength tau (exclusive with --alpha/--mass)
    #[arg(long)]
    tau: Option<f64>,
    /// Coulomb coupling alpha (needs --mass)
    #[arg(long)]
    alpha: Option<f64>,
    /// Particle mass m (equal masses; needs --alpha)
    #[arg(long)]
    mass: Option<f64>,
    /// Relative momentum k
    #[arg(long)]
    k: Option<f64>,
    /// Theta grid MIN:MAX:COUNT in degrees
    #[arg(long)]
    theta: Option<String>,
    /// Output file (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format: csv or jsonl
    #[arg(long)]
    format: Option<String>,
    /// Also evaluate the regularized partial-wave sum and its deviation
    #[arg(long = "partial-wave")]
    partial_wave: bool,
    /// Annotate columns with units (natural units; no conversion)
    #[arg(long)]
    units: bool,
}

#[derive(Args)]
struct XsecArgs {
    /// Coulomb coupling alpha
    #[arg(long)]
    alpha: Option<f64>,
    /// Particle mass m (equal masses)
    #[arg(long)]
    mass: Option<f64>,
    /// Relative momentum k
    #[arg(long)]
    k: Option<f64>,
    /// Theta grid MIN:MAX:COUNT in degrees
    #[arg(long)]
    theta: Option<String>,
    /// Output file (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format: csv or jsonl
    #[arg(long)]
    format: Option<String>,
    /// Annotate columns with units (natural units; no conversion)
    #[arg(long)]
    units: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Sweep axis: k, alpha or tau
    #[arg(long)]
    axis: Option<String>,
    /// Axis range MIN:MAX:COUNT
    #[arg(long)]
    range: Option<String>,
    /// Fixed tau (amplitude mode)
    #[arg(long)]
    tau: Option<f64>,
    /// Coulomb coupling alpha (cross-section mode, with --mass)
    #[arg(long)]
    alpha: Option<f64>,
    /// Particle mass m
    #[arg(long)]
    mass: Option<f64>,
    /// Relative momentum k (fixed unless axis = k)
    #[arg(long)]
    k: Option<f64>,
    /// Theta grid MIN:MAX:COUNT in degrees
    #[arg(long)]
    theta: Option<String>,
    /// Output file (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 2u8,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };

    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::CheckFailure(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let config = ConfigMap::load()?;
    match cli.command {
        Command::Verify(args) => run_verify(args, &config),
        Command::Amplitude(args) => run_amplitude(args, &config),
        Command::Xsec(args) => run_xsec(args, &config),
        Command::Sweep(args) => sweep::run(args, &config),
    }
}

fn run_verify(args: VerifyArgs, config: &ConfigMap) -> CliResult<()> {
    let tau = args
        .tau
        .or(config.get_f64("tau")?)
        .ok_or_else(|| CliError::config("verify needs --tau"))?;
    let lmax = args.lmax.or(config.get_u32("lmax")?).unwrap_or(30);
    let tols = verify::Tolerances::resolve(&args.tol, config)?;

    let outcome = verify::run_verify(tau, lmax, &tols)?;
    print!("{}", outcome.rendered);
    if outcome.failed > 0 {
        return Err(CliError::CheckFailure(format!(
            "verify: {} of {} gated checks failed",
            outcome.failed, outcome.gated
        )));
    }
    Ok(())
}

/// Resolve the interaction spec: exactly one of tau or (alpha, mass).
/// Returns (tau, alpha, mass) with tau derived via alpha m / 2k when needed.
fn resolve_interaction(
    tau: Option<f64>,
    alpha: Option<f64>,
    mass: Option<f64>,
    k: f64,
) -> CliResult<(f64, Option<f64>, Option<f64>)> {
    match (tau, alpha, mass) {
        (Some(t), None, None) => Ok((t, None, None)),
        (None, Some(a), Some(m)) => {
            if m <= 0.0 {
                return Err(CliError::config("mass must be positive"));
            }
            let t = scatter_core::kinematics::coulomb_tau(a, m, k)?;
            Ok((t, Some(a), Some(m)))
        }
        (Some(_), _, _) => Err(CliError::config(
            "give either --tau or --alpha with --mass, not both",
        )),
        _ => Err(CliError::config(
            "interaction unspecified: give --tau, or --alpha with --mass",
        )),
    }
}

fn run_amplitude(args: AmplitudeArgs, config: &ConfigMap) -> CliResult<()> {
    let k = args
        .k
        .or(config.get_f64("k")?)
        .ok_or_else(|| CliError::config("amplitude needs --k"))?;
    if k <= 0.0 {
        return Err(CliError::config("k must be positive"));
    }
    let tau = args.tau.or(config.get_f64("tau")?);
    let alpha = args.alpha.or(config.get_f64("alpha")?);
    let mass = args.mass.or(config.get_f64("mass")?);
    let (tau, _, _) = resolve_interaction(tau, alpha, mass, k)?;

    let grid = GridSpec::resolve(args.theta.as_deref(), config)?;
    let partial_wave = args.partial_wave || config.get_bool("partial-wave")?;
    grid.check_window(if partial_wave {
        scatter_core::amplitude::THETA_MAX_SYMMETRIZED
    } else {
        std::f64::consts::PI
    })?;

    let rows = table::amplitude_rows(tau, k, &grid.thetas_rad(), partial_wave)?;
    let format = Format::resolve(args.format.as_deref(), config)?;
    let units = args.units || config.get_bool("units")?;
    let content = table::render_amplitude(&rows, format, partial_wave, units);
    let out = args.out.or(config.get_path("out")?);
    write_output(out.as_deref(), &content)
}

fn run_xsec(args: XsecArgs, config: &ConfigMap) -> CliResult<()> {
    let alpha = args
        .alpha
        .or(config.get_f64("alpha")?)
        .ok_or_else(|| CliError::config("xsec needs --alpha"))?;
    let mass = args
        .mass
        .or(config.get_f64("mass")?)
        .ok_or_else(|| CliError::config("xsec needs --mass"))?;
    let k = args
        .k
        .or(config.get_f64("k")?)
        .ok_or_else(|| CliError::config("xsec needs --k"))?;
    if mass <= 0.0 || k <= 0.0 {
        return Err(CliError::config("mass and k must be positive"));
    }

    let grid = GridSpec::resolve(args.theta.as_deref(), config)?;
    grid.check_window(scatter_core::amplitude::THETA_MAX_SYMMETRIZED)?;

    let rows = table::xsec_rows(alpha, mass, k, &grid.thetas_rad())?;
    let format = Format::resolve(args.format.as_deref(), config)?;
    let units = args.units || config.get_bool("units")?;
    let content = table::render_xsec(&rows, format, units);
    let out = args.out.or(config.get_path("out")?);
    write_output(out.as_deref(), &content)
}
