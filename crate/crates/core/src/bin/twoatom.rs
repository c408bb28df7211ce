use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use twoatom::couplings::{collective_damping, dipole_dipole_shift};
use twoatom::scenario::{
    figure, format_number, run_scenario, sweep, write_sweep_csv, write_trajectory_csv, Figure, RateSource, SweepAxis,
};
use twoatom::{Error, Geometry, Result, Scenario, TimeGrid};

/// Entanglement dynamics of two dipole-coupled two-level atoms.
///
/// Rates are in units of the single-atom decay rate Γ, times in units of 1/Γ.
/// Exit status: 0 on success, 2 on invalid input, 3 on numerical failure.
#[derive(Parser)]
#[command(name = "twoatom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Separation parameter x = k0·r12.
    #[arg(long, global = true, allow_negative_numbers = true)]
    x: Option<f64>,

    /// Cosine of the angle between the dipoles and the interatomic axis.
    #[arg(long = "mu-dot-r", global = true, allow_negative_numbers = true)]
    mu_dot_r: Option<f64>,

    /// Detuning Δ = (ω2 − ω1)/2.
    #[arg(long, global = true, allow_negative_numbers = true)]
    delta: Option<f64>,

    /// Scenario file (key = value lines).
    #[arg(long, global = true)]
    scenario: Option<PathBuf>,

    /// Output file, or directory for `figure all`. Defaults to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Number of time points.
    #[arg(long, global = true)]
    points: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print Γ12 and Ω12 for a geometry.
    Couplings,
    /// Evolve one scenario and write its trajectory as CSV.
    Run,
    /// Repeat a scenario over values of one parameter.
    Sweep {
        /// x, mu_dot_r, delta, gamma12 or omega12.
        #[arg(long)]
        axis: String,
        /// Comma-separated values.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        values: Vec<f64>,
    },
    /// Write the data behind a figure: fig2, fig3, fig4, fig5 or all.
    Figure { name: String },
}

fn writer(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn base_scenario(cli: &Cli) -> Result<Scenario> {
    let mut s = match &cli.scenario {
        Some(path) => Scenario::from_file(path)?,
        None => Scenario::fig2(),
    };
    if cli.x.is_some() || cli.mu_dot_r.is_some() {
        let RateSource::Geometry(g) = s.rates else {
            return Err(Error::Invalid("--x/--mu-dot-r conflict with explicit rates in the scenario".into()));
        };
        s.rates = RateSource::Geometry(Geometry::new(
            cli.x.unwrap_or(g.x()),
            cli.mu_dot_r.unwrap_or(g.mu_dot_r()),
        )?);
    }
    if let Some(d) = cli.delta {
        s.delta = d;
    }
    if let Some(n) = cli.points {
        s.grid = TimeGrid::new(s.grid.t_start(), s.grid.t_end(), n)?;
    }
    s.validate()?;
    Ok(s)
}

fn execute(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Couplings => {
            let default = twoatom::scenario::lambda_over_12();
            let g = Geometry::new(cli.x.unwrap_or(default.x()), cli.mu_dot_r.unwrap_or(0.0))?;
            let omega12 = dipole_dipole_shift(&g)?;
            let mut w = writer(cli.out.as_deref())?;
            writeln!(w, "x,mu_dot_r,gamma12,omega12")?;
            writeln!(
                w,
                "{},{},{},{}",
                format_number(g.x()),
                format_number(g.mu_dot_r()),
                format_number(collective_damping(&g)),
                format_number(omega12)
            )?;
            w.flush()?;
        }
        Command::Run => {
            let s = base_scenario(cli)?;
            let records = run_scenario(&s)?;
            let mut w = writer(cli.out.as_deref())?;
            write_trajectory_csv(&mut w, &records, &s.outputs)?;
            w.flush()?;
        }
        Command::Sweep { axis, values } => {
            let axis: SweepAxis = axis.parse()?;
            let s = base_scenario(cli)?;
            let rows = sweep(&s, axis, values);
            let mut w = writer(cli.out.as_deref())?;
            write_sweep_csv(&mut w, &rows)?;
            w.flush()?;
        }
        Command::Figure { name } => {
            if cli.x.is_some() || cli.mu_dot_r.is_some() || cli.delta.is_some() || cli.scenario.is_some() {
                return Err(Error::Invalid("figure accepts only --points and --out".into()));
            }
            if name == "all" {
                let dir = cli
                    .out
                    .as_deref()
                    .ok_or_else(|| Error::Invalid("figure all needs --out <directory>".into()))?;
                std::fs::create_dir_all(dir)?;
                for fig in Figure::ALL {
                    let table = figure(fig, cli.points)?;
                    let mut w = writer(Some(&dir.join(format!("{}.csv", fig.name()))))?;
                    table.write_csv(&mut w)?;
                    w.flush()?;
                }
            } else {
                let table = figure(name.parse()?, cli.points)?;
                let mut w = writer(cli.out.as_deref())?;
                table.write_csv(&mut w)?;
                w.flush()?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            ExitCode::from(if e.is_numerical() { 3 } else { 2 })
        }
    }
}
