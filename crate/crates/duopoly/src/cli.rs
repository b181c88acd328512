//! The `duopoly` command-line interface.
//!
//! Five subcommands — `payoff`, `equilibrium`, `sweep`, `critical`, `rho` —
//! emit deterministic CSV (or a matrix dump) to stdout or a file. Exit codes:
//! 0 success, 2 usage or domain error, 3 numeric/closed-form disagreement,
//! 4 solver failure.

use std::fs::File;
use std::io::{self, BufWriter, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::equilibrium::{
    backward_induction, closed_form_equilibrium, find_breakdown_r, find_crossing_r,
    find_vanishing_r, EquilibriumOutcome, PATH_AGREEMENT_TOL, QUANTITY_CEILING,
};
use crate::error::Error as LibError;
use crate::fmt::f64_shortest;
use crate::game::{payoff_pair, GameParameters, QuantityPair};
use crate::state::{closed_form_rho, AccelerationParameter, EntanglementAngle};
use crate::sweep::{sweep_rows, write_sweep_csv, SweepAxis, SweepSpec};

#[derive(Debug, Parser)]
#[command(
    name = "duopoly",
    version,
    about = "Stackelberg duopoly between an inertial and a uniformly accelerated firm: \
             payoffs, equilibria, sweeps, and critical accelerations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate both firms' payoffs at given quantities
    Payoff(PayoffArgs),
    /// Solve the leader-follower equilibrium (numeric path, cross-checked
    /// against the closed form)
    Equilibrium(InstanceArgs),
    /// Sweep the equilibrium along r or theta, emitting CSV
    Sweep(SweepArgs),
    /// Report critical accelerations: payoff vanishing, payoff crossing,
    /// validity breakdown
    Critical(InstanceArgs),
    /// Print the shared 4x4 density matrix
    Rho(RhoArgs),
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    /// Entanglement angle theta, radians (degrees with --degrees)
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
    /// Acceleration parameter r, radians (degrees with --degrees)
    #[arg(long, default_value_t = 0.0)]
    pub r: f64,
    /// Demand constant k
    #[arg(long, default_value_t = 1.0)]
    pub k: f64,
    /// Interpret angle flags (and sweep bounds) as degrees
    #[arg(long)]
    pub degrees: bool,
    /// Output destination: a file path, or "stdout"
    #[arg(long, default_value = "stdout")]
    pub out: String,
}

#[derive(Debug, Args)]
pub struct PayoffArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Leader's quantity
    #[arg(long)]
    pub q1: f64,
    /// Follower's quantity
    #[arg(long)]
    pub q2: f64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Swept coordinate
    #[arg(long, value_enum)]
    pub axis: AxisArg,
    /// Lower grid bound (inclusive)
    #[arg(long)]
    pub lo: f64,
    /// Upper grid bound (inclusive)
    #[arg(long)]
    pub hi: f64,
    /// Number of grid points
    #[arg(long)]
    pub steps: usize,
    /// Worker threads; results are identical for any value
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct RhoArgs {
    /// Entanglement angle theta, radians (degrees with --degrees)
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
    /// Acceleration parameter r, radians (degrees with --degrees)
    #[arg(long, default_value_t = 0.0)]
    pub r: f64,
    /// Interpret angle flags as degrees
    #[arg(long)]
    pub degrees: bool,
    /// Output destination: a file path, or "stdout"
    #[arg(long, default_value = "stdout")]
    pub out: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxisArg {
    R,
    Theta,
}

impl From<AxisArg> for SweepAxis {
    fn from(axis: AxisArg) -> Self {
        match axis {
            AxisArg::R => SweepAxis::R,
            AxisArg::Theta => SweepAxis::Theta,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("numeric and closed-form paths disagree: {0}")]
    OracleMismatch(String),
    #[error("solver failure: {0}")]
    Solver(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    /// Exit-code contract: 2 usage/domain, 3 oracle disagreement, 4 solver
    /// failure; i/o problems map to the generic 1.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::OracleMismatch(_) => 3,
            CliError::Solver(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

fn lift(err: LibError) -> CliError {
    match err {
        LibError::Solver(msg) => CliError::Solver(msg),
        other => CliError::Usage(other.to_string()),
    }
}

fn to_radians(value: f64, degrees: bool) -> f64 {
    if degrees {
        value.to_radians()
    } else {
        value
    }
}

fn parse_instance(args: &InstanceArgs) -> Result<GameParameters, CliError> {
    GameParameters::from_radians(
        to_radians(args.theta, args.degrees),
        to_radians(args.r, args.degrees),
        args.k,
    )
    .map_err(lift)
}

fn open_out(out: &str) -> Result<Box<dyn Write>, CliError> {
    if out == "stdout" {
        Ok(Box::new(BufWriter::new(io::stdout())))
    } else {
        Ok(Box::new(BufWriter::new(File::create(out)?)))
    }
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Payoff(args) => cmd_payoff(args),
        Command::Equilibrium(args) => cmd_equilibrium(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Critical(args) => cmd_critical(args),
        Command::Rho(args) => cmd_rho(args),
    }
}

fn cmd_payoff(args: &PayoffArgs) -> Result<(), CliError> {
    let params = parse_instance(&args.instance)?;
    // The library takes any finite nonnegative quantity; the CLI caps at the
    // solver's search ceiling.
    for (name, q) in [("q1", args.q1), ("q2", args.q2)] {
        if q > QUANTITY_CEILING {
            return Err(CliError::Usage(format!(
                "{name} must not exceed {QUANTITY_CEILING}, got {q}"
            )));
        }
    }
    let q = QuantityPair::new(args.q1, args.q2).map_err(lift)?;
    let pay = payoff_pair(&params, &q);
    let mut w = open_out(&args.instance.out)?;
    writeln!(w, "theta,r,k,q1,q2,payoff_A,payoff_B")?;
    writeln!(
        w,
        "{},{},{},{},{},{},{}",
        f64_shortest(params.theta().radians()),
        f64_shortest(params.r().radians()),
        f64_shortest(params.k()),
        f64_shortest(q.q1()),
        f64_shortest(q.q2()),
        f64_shortest(pay.p_a),
        f64_shortest(pay.p_b),
    )?;
    w.flush()?;
    Ok(())
}

fn max_outcome_deviation(a: &EquilibriumOutcome, b: &EquilibriumOutcome) -> f64 {
    [
        (a.q1_star - b.q1_star).abs(),
        (a.q2_star - b.q2_star).abs(),
        (a.p_a - b.p_a).abs(),
        (a.p_b - b.p_b).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

fn cmd_equilibrium(args: &InstanceArgs) -> Result<(), CliError> {
    let params = parse_instance(args)?;
    let numeric = backward_induction(&params).map_err(lift)?;
    let closed = closed_form_equilibrium(&params).map_err(lift)?;
    if numeric.valid != closed.valid {
        return Err(CliError::OracleMismatch(format!(
            "validity differs (numeric {}, closed form {})",
            numeric.valid, closed.valid
        )));
    }
    if numeric.valid {
        let gap = max_outcome_deviation(&numeric, &closed);
        if gap > PATH_AGREEMENT_TOL {
            return Err(CliError::OracleMismatch(format!(
                "maximum deviation {gap} exceeds {PATH_AGREEMENT_TOL}"
            )));
        }
    }
    let mut w = open_out(&args.out)?;
    writeln!(
        w,
        "theta,r,k,q1_star,q2_star,payoff_A,payoff_B,valid,reason"
    )?;
    writeln!(
        w,
        "{},{},{},{},{},{},{},{},{}",
        f64_shortest(params.theta().radians()),
        f64_shortest(params.r().radians()),
        f64_shortest(params.k()),
        f64_shortest(numeric.q1_star),
        f64_shortest(numeric.q2_star),
        f64_shortest(numeric.p_a),
        f64_shortest(numeric.p_b),
        numeric.valid,
        numeric.reason,
    )?;
    w.flush()?;
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), CliError> {
    let params = parse_instance(&args.instance)?;
    let spec = SweepSpec::new(
        args.axis.into(),
        to_radians(args.lo, args.instance.degrees),
        to_radians(args.hi, args.instance.degrees),
        args.steps,
        params,
    )
    .map_err(lift)?;
    let rows = sweep_rows(&spec, args.jobs).map_err(lift)?;
    let mut w = open_out(&args.instance.out)?;
    write_sweep_csv(&mut w, &rows)?;
    w.flush()?;
    Ok(())
}

/// Scans the valid region for an equal-payoff point and refines any sign
/// change by bisection.
fn scan_crossing(params: &GameParameters, r_max: f64) -> Result<Option<f64>, CliError> {
    const SCAN_POINTS: usize = 256;
    let mut previous: Option<(f64, f64)> = None;
    for i in 0..=SCAN_POINTS {
        let r = r_max * (1.0 - 1e-9) * i as f64 / SCAN_POINTS as f64;
        let p = GameParameters::new(
            params.theta(),
            AccelerationParameter::new(r).map_err(lift)?,
            params.k(),
        )
        .map_err(lift)?;
        let out = closed_form_equilibrium(&p).map_err(lift)?;
        if !out.valid {
            break;
        }
        let diff = out.p_a - out.p_b;
        if diff == 0.0 {
            return Ok(Some(r));
        }
        if let Some((r_prev, d_prev)) = previous {
            if d_prev.signum() != diff.signum() {
                let root = find_crossing_r(params, r_prev, r).map_err(lift)?;
                return Ok(Some(root));
            }
        }
        previous = Some((r, diff));
    }
    Ok(None)
}

fn cmd_critical(args: &InstanceArgs) -> Result<(), CliError> {
    let params = parse_instance(args)?;
    let vanishing = find_vanishing_r(&params).map_err(lift)?;
    let breakdown = find_breakdown_r(&params).map_err(lift)?;
    let crossing = scan_crossing(&params, breakdown)?;
    let mut w = open_out(&args.out)?;
    writeln!(w, "kind,value")?;
    writeln!(w, "vanishing_r,{}", f64_shortest(vanishing))?;
    if let Some(root) = crossing {
        writeln!(w, "crossing_r,{}", f64_shortest(root))?;
    }
    writeln!(w, "breakdown_r,{}", f64_shortest(breakdown))?;
    w.flush()?;
    Ok(())
}

fn cmd_rho(args: &RhoArgs) -> Result<(), CliError> {
    let theta = EntanglementAngle::new(to_radians(args.theta, args.degrees)).map_err(lift)?;
    let r = AccelerationParameter::new(to_radians(args.r, args.degrees)).map_err(lift)?;
    let rho = closed_form_rho(theta, r);
    let mut w = open_out(&args.out)?;
    w.write_all(rho.dump().as_bytes())?;
    w.flush()?;
    Ok(())
}
