//! Scenarios, trajectory tables, sweeps and figure data.
//!
//! A scenario is a named initial condition, a source for the coupling
//! rates, a detuning and a time grid. It can be read from a flat
//! `key = value` text file:
//!
//! ```text
//! # one atom excited at a twelfth of a wavelength
//! name = fig2
//! initial = atom1_excited     # atom1_excited | atom2_excited | both_excited
//!                             # | symmetric | antisymmetric | custom
//! r_over_lambda = 0.08333333333333333   # or: x = 0.5235987755982988
//! mu_dot_r = 0
//! delta = 0
//! t_end = 3
//! points = 3000
//! outputs = concurrence, negativity, populations, coherences, s_squared
//! ```
//!
//! Other keys: `gamma`, `gamma12`, `omega12` (explicit rates, overriding the
//! geometry), `omega0`, `t_start`, `solver` (`auto | analytic | ode |
//! master`) and, for `initial = custom`, `r11 r22 r33 r44 r12_re r12_im
//! r34_re r34_im`.
//!
//! Tables are written as CSV with a header row, `,` separators, `\n` line
//! endings and every number in `{:.16e}` form (17 significant digits).

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::couplings::{collective_damping, dipole_dipole_shift, Geometry};
use crate::dynamics::{
    evolve_analytic_grid, evolve_block_ode, evolve_full_master, total_spin_squared, AtomPairParams, TimeGrid,
};
use crate::entanglement::EntanglementReport;
use crate::error::{Error, Result};
use crate::statespace::{from_collective, to_collective, BlockState, CollectiveState, TOL_TRACE};

/// Time at which sweeps report the late-time concurrence.
pub const LATE_TIME: f64 = 5.0;

/// Tolerance on cross-block entries when reading back full-master states.
const BLOCK_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialState {
    Atom1Excited,
    Atom2Excited,
    BothExcited,
    Symmetric,
    Antisymmetric,
    Custom(BlockState),
}

impl InitialState {
    pub fn block(&self) -> BlockState {
        match self {
            InitialState::Atom1Excited => BlockState::atom1_excited(),
            InitialState::Atom2Excited => BlockState::atom2_excited(),
            InitialState::BothExcited => BlockState::both_excited(),
            InitialState::Symmetric => BlockState::symmetric(),
            InitialState::Antisymmetric => BlockState::antisymmetric(),
            InitialState::Custom(b) => *b,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            InitialState::Atom1Excited => "atom1_excited",
            InitialState::Atom2Excited => "atom2_excited",
            InitialState::BothExcited => "both_excited",
            InitialState::Symmetric => "symmetric",
            InitialState::Antisymmetric => "antisymmetric",
            InitialState::Custom(_) => "custom",
        }
    }
}

/// Where `Γ12` and `Ω12` come from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RateSource {
    Geometry(Geometry),
    /// Rates in the same unit as `gamma`.
    Explicit { gamma12: f64, omega12: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Solver {
    /// Closed form when the atoms are identical and away from the Dicke
    /// point, the collective ODE otherwise.
    #[default]
    Auto,
    Analytic,
    BlockOde,
    FullMaster,
}

impl FromStr for Solver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Solver::Auto),
            "analytic" => Ok(Solver::Analytic),
            "ode" => Ok(Solver::BlockOde),
            "master" => Ok(Solver::FullMaster),
            _ => Err(Error::Invalid(format!("unknown solver '{s}'"))),
        }
    }
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Solver::Auto => "auto",
            Solver::Analytic => "analytic",
            Solver::BlockOde => "ode",
            Solver::FullMaster => "master",
        })
    }
}

/// Column groups of a trajectory table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutputSet {
    pub concurrence: bool,
    pub negativity: bool,
    pub populations: bool,
    pub coherences: bool,
    pub s_squared: bool,
}

impl Default for OutputSet {
    fn default() -> Self {
        Self {
            concurrence: true,
            negativity: true,
            populations: true,
            coherences: true,
            s_squared: true,
        }
    }
}

impl FromStr for OutputSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = OutputSet {
            concurrence: false,
            negativity: false,
            populations: false,
            coherences: false,
            s_squared: false,
        };
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            match item {
                "concurrence" => out.concurrence = true,
                "negativity" => out.negativity = true,
                "populations" => out.populations = true,
                "coherences" => out.coherences = true,
                "s_squared" => out.s_squared = true,
                _ => return Err(Error::Invalid(format!("unknown output '{item}'"))),
            }
        }
        Ok(out)
    }
}

impl OutputSet {
    fn names(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.concurrence {
            v.push("concurrence");
        }
        if self.negativity {
            v.push("negativity");
        }
        if self.populations {
            v.push("populations");
        }
        if self.coherences {
            v.push("coherences");
        }
        if self.s_squared {
            v.push("s_squared");
        }
        v
    }

    pub fn columns(&self) -> Vec<&'static str> {
        let mut cols = vec!["t"];
        if self.concurrence {
            cols.push("concurrence");
        }
        if self.negativity {
            cols.push("negativity");
        }
        if self.populations {
            cols.extend(["rho_ee", "rho_ss", "rho_aa", "rho_gg"]);
        }
        if self.coherences {
            cols.extend(["re_rho_as", "im_rho_as"]);
        }
        if self.s_squared {
            cols.push("s_squared");
        }
        cols
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub initial: InitialState,
    pub rates: RateSource,
    pub gamma: f64,
    pub delta: f64,
    pub omega0: f64,
    pub grid: TimeGrid,
    pub outputs: OutputSet,
    pub solver: Solver,
}

/// Separation of a twelfth of the resonant wavelength, `k0·r12 = π/6`.
pub fn lambda_over_12() -> Geometry {
    Geometry::perpendicular(PI / 6.0).expect("π/6 is a valid separation")
}

impl Scenario {
    /// One atom excited, `r12 = λ/12`, dipoles perpendicular to the axis,
    /// `Γt ∈ [0, 3]` on 3000 points.
    pub fn fig2() -> Self {
        Self {
            name: "fig2".into(),
            initial: InitialState::Atom1Excited,
            rates: RateSource::Geometry(lambda_over_12()),
            gamma: 1.0,
            delta: 0.0,
            omega0: 0.0,
            grid: TimeGrid::new(0.0, 3.0, 3000).expect("static grid"),
            outputs: OutputSet::default(),
            solver: Solver::Auto,
        }
    }

    pub fn fig3() -> Self {
        Self {
            name: "fig3".into(),
            ..Self::fig2()
        }
    }

    /// Both atoms excited; the slow subradiant tail needs `Γt ∈ [0, 10]`.
    pub fn fig4() -> Self {
        Self {
            name: "fig4".into(),
            initial: InitialState::BothExcited,
            grid: TimeGrid::new(0.0, 10.0, 5000).expect("static grid"),
            ..Self::fig2()
        }
    }

    /// Nonidentical atoms with `Δ = 10Γ`.
    pub fn fig5() -> Self {
        Self {
            name: "fig5".into(),
            delta: 10.0,
            ..Self::fig2()
        }
    }

    pub fn params(&self) -> Result<AtomPairParams> {
        if !(self.gamma.is_finite() && self.gamma > 0.0) {
            return Err(Error::Invalid(format!("gamma must be positive, got {}", self.gamma)));
        }
        let (gamma12, omega12) = match self.rates {
            RateSource::Geometry(g) => (self.gamma * collective_damping(&g), self.gamma * dipole_dipole_shift(&g)?),
            RateSource::Explicit { gamma12, omega12 } => (gamma12, omega12),
        };
        let p = AtomPairParams {
            gamma: self.gamma,
            gamma12,
            omega12,
            delta: self.delta,
            omega0: self.omega0,
        };
        p.check()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        self.initial.block().check()?;
        self.params()?;
        Ok(())
    }

    /// Reads a scenario file; keys absent from the file take the values of
    /// [`Scenario::fig2`].
    pub fn parse(text: &str) -> Result<Self> {
        let mut kv: BTreeMap<String, String> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Invalid(format!("line {}: expected 'key = value'", lineno + 1)))?;
            let k = k.trim().to_string();
            if kv.insert(k.clone(), v.trim().to_string()).is_some() {
                return Err(Error::Invalid(format!("line {}: duplicate key '{k}'", lineno + 1)));
            }
        }
        Self::from_map(kv)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    fn from_map(mut kv: BTreeMap<String, String>) -> Result<Self> {
        let mut take = |k: &str| kv.remove(k);
        let num = |k: &str, v: Option<String>| -> Result<Option<f64>> {
            v.map(|s| {
                s.parse::<f64>()
                    .map_err(|_| Error::Invalid(format!("key '{k}': '{s}' is not a number")))
            })
            .transpose()
        };

        let base = Scenario::fig2();
        let name = take("name").unwrap_or_else(|| "scenario".into());

        let custom_keys = ["r11", "r22", "r33", "r44", "r12_re", "r12_im", "r34_re", "r34_im"];
        let mut custom = [0.0; 8];
        let mut any_custom = false;
        for (slot, k) in custom.iter_mut().zip(custom_keys) {
            if let Some(v) = num(k, take(k))? {
                *slot = v;
                any_custom = true;
            }
        }
        let initial = match take("initial").as_deref().unwrap_or("atom1_excited") {
            "atom1_excited" => InitialState::Atom1Excited,
            "atom2_excited" => InitialState::Atom2Excited,
            "both_excited" => InitialState::BothExcited,
            "symmetric" => InitialState::Symmetric,
            "antisymmetric" => InitialState::Antisymmetric,
            "custom" => {
                let [r11, r22, r33, r44, a, b, c, d] = custom;
                InitialState::Custom(BlockState::new(
                    r11,
                    r22,
                    r33,
                    r44,
                    Complex64::new(a, b),
                    Complex64::new(c, d),
                )?)
            }
            other => return Err(Error::Invalid(format!("unknown initial state '{other}'"))),
        };
        if any_custom && !matches!(initial, InitialState::Custom(_)) {
            return Err(Error::Invalid("matrix elements given but initial is not 'custom'".into()));
        }

        let x = num("x", take("x"))?;
        let r_over_lambda = num("r_over_lambda", take("r_over_lambda"))?;
        let mu = num("mu_dot_r", take("mu_dot_r"))?.unwrap_or(0.0);
        let geometry = match (x, r_over_lambda) {
            (Some(_), Some(_)) => return Err(Error::Invalid("give either 'x' or 'r_over_lambda', not both".into())),
            (Some(x), None) => Geometry::new(x, mu)?,
            (None, Some(r)) => Geometry::from_wavelengths(r, mu)?,
            (None, None) => Geometry::new(lambda_over_12().x(), mu)?,
        };
        let gamma = num("gamma", take("gamma"))?.unwrap_or(1.0);
        let gamma12 = num("gamma12", take("gamma12"))?;
        let omega12 = num("omega12", take("omega12"))?;
        let rates = match (gamma12, omega12) {
            (None, None) => RateSource::Geometry(geometry),
            (g12, o12) => RateSource::Explicit {
                gamma12: g12.unwrap_or(gamma * collective_damping(&geometry)),
                omega12: match o12 {
                    Some(v) => v,
                    None => gamma * dipole_dipole_shift(&geometry)?,
                },
            },
        };

        let delta = num("delta", take("delta"))?.unwrap_or(0.0);
        let omega0 = num("omega0", take("omega0"))?.unwrap_or(0.0);
        let t_start = num("t_start", take("t_start"))?.unwrap_or(base.grid.t_start());
        let t_end = num("t_end", take("t_end"))?.unwrap_or(base.grid.t_end());
        let points = match take("points") {
            Some(s) => s
                .parse::<usize>()
                .map_err(|_| Error::Invalid(format!("key 'points': '{s}' is not a count")))?,
            None if t_end == t_start => 1,
            None => base.grid.n_points(),
        };
        let grid = TimeGrid::new(t_start, t_end, points)?;
        let outputs = match take("outputs") {
            Some(s) => s.parse()?,
            None => OutputSet::default(),
        };
        let solver = match take("solver") {
            Some(s) => s.parse()?,
            None => Solver::Auto,
        };
        if let Some(k) = kv.keys().next() {
            return Err(Error::Invalid(format!("unknown key '{k}'")));
        }

        let s = Scenario {
            name,
            initial,
            rates,
            gamma,
            delta,
            omega0,
            grid,
            outputs,
            solver,
        };
        s.validate()?;
        Ok(s)
    }

    /// Scenario-file text that parses back to `self`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k} = {v}\n"));
        line("name", self.name.clone());
        line("initial", self.initial.name().into());
        if let InitialState::Custom(b) = self.initial {
            for (k, v) in [
                ("r11", b.r11),
                ("r22", b.r22),
                ("r33", b.r33),
                ("r44", b.r44),
                ("r12_re", b.r12.re),
                ("r12_im", b.r12.im),
                ("r34_re", b.r34.re),
                ("r34_im", b.r34.im),
            ] {
                line(k, format!("{v:?}"));
            }
        }
        match self.rates {
            RateSource::Geometry(g) => {
                line("x", format!("{:?}", g.x()));
                line("mu_dot_r", format!("{:?}", g.mu_dot_r()));
            }
            RateSource::Explicit { gamma12, omega12 } => {
                line("gamma12", format!("{gamma12:?}"));
                line("omega12", format!("{omega12:?}"));
            }
        }
        line("gamma", format!("{:?}", self.gamma));
        line("delta", format!("{:?}", self.delta));
        line("omega0", format!("{:?}", self.omega0));
        line("t_start", format!("{:?}", self.grid.t_start()));
        line("t_end", format!("{:?}", self.grid.t_end()));
        line("points", self.grid.n_points().to_string());
        line("outputs", self.outputs.names().join(", "));
        line("solver", self.solver.to_string());
        out
    }
}

/// One output row of a trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryRecord {
    pub t: f64,
    pub concurrence: f64,
    pub negativity: f64,
    pub rho_ee: f64,
    pub rho_ss: f64,
    pub rho_aa: f64,
    pub rho_gg: f64,
    pub re_rho_as: f64,
    pub im_rho_as: f64,
    pub s_squared: f64,
}

impl TrajectoryRecord {
    pub fn from_collective(t: f64, c: &CollectiveState) -> Self {
        let report = EntanglementReport::from_block(&from_collective(c));
        Self {
            t,
            concurrence: report.concurrence,
            negativity: report.negativity,
            rho_ee: c.ree,
            rho_ss: c.rss,
            rho_aa: c.raa,
            rho_gg: c.rgg,
            re_rho_as: c.ras.re,
            im_rho_as: c.ras.im,
            s_squared: total_spin_squared(c),
        }
    }

    pub fn populations_sum(&self) -> f64 {
        self.rho_ee + self.rho_ss + self.rho_aa + self.rho_gg
    }

    pub fn is_consistent(&self) -> bool {
        (self.populations_sum() - 1.0).abs() <= TOL_TRACE
    }

    fn values(&self, outputs: &OutputSet) -> Vec<f64> {
        let mut v = vec![self.t];
        if outputs.concurrence {
            v.push(self.concurrence);
        }
        if outputs.negativity {
            v.push(self.negativity);
        }
        if outputs.populations {
            v.extend([self.rho_ee, self.rho_ss, self.rho_aa, self.rho_gg]);
        }
        if outputs.coherences {
            v.extend([self.re_rho_as, self.im_rho_as]);
        }
        if outputs.s_squared {
            v.push(self.s_squared);
        }
        v
    }
}

/// Collective-basis states on the scenario grid.
pub fn evolve_scenario(s: &Scenario) -> Result<Vec<CollectiveState>> {
    evolve_scenario_with(s, s.solver).map_err(|e| e.in_scenario(&s.name))
}

fn evolve_scenario_with(s: &Scenario, solver: Solver) -> Result<Vec<CollectiveState>> {
    let p = s.params()?;
    let b0 = s.initial.block();
    b0.check()?;
    let c0 = to_collective(&b0);
    let solver = match solver {
        Solver::Auto if p.delta == 0.0 && !(c0.ree > 0.0 && p.near_dicke_point()) => Solver::Analytic,
        Solver::Auto => Solver::BlockOde,
        other => other,
    };
    match solver {
        Solver::Analytic => evolve_analytic_grid(&c0, &p, &s.grid),
        Solver::BlockOde | Solver::Auto => evolve_block_ode(&c0, &p, &s.grid),
        Solver::FullMaster => evolve_full_master(&b0.to_density(), &p, &s.grid)?
            .iter()
            .map(|m| m.to_block(BLOCK_TOL).map(|b| to_collective(&b)))
            .collect(),
    }
}

/// Evolves the scenario and evaluates concurrence and negativity on its grid.
pub fn run_scenario(s: &Scenario) -> Result<Vec<TrajectoryRecord>> {
    run_scenario_with(s, s.solver)
}

/// As [`run_scenario`] with the evolution route forced.
pub fn run_scenario_with(s: &Scenario, solver: Solver) -> Result<Vec<TrajectoryRecord>> {
    let traj = evolve_scenario_with(s, solver).map_err(|e| e.in_scenario(&s.name))?;
    Ok(s
        .grid
        .times()
        .into_iter()
        .zip(&traj)
        .map(|(t, c)| TrajectoryRecord::from_collective(t, c))
        .collect())
}

/// Renders a number for CSV output: 17 significant digits.
pub fn format_number(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_row<W: Write>(w: &mut W, values: &[f64]) -> std::io::Result<()> {
    let line: Vec<String> = values.iter().map(|&v| format_number(v)).collect();
    w.write_all(line.join(",").as_bytes())?;
    w.write_all(b"\n")
}

pub fn write_trajectory_csv<W: Write>(w: &mut W, records: &[TrajectoryRecord], outputs: &OutputSet) -> Result<()> {
    writeln!(w, "{}", outputs.columns().join(","))?;
    for r in records {
        write_row(w, &r.values(outputs))?;
    }
    Ok(())
}

/// First local maximum of the concurrence along a trajectory, as `(t, C)`.
/// Returns the first record when the concurrence never becomes positive.
pub fn first_maximum(records: &[TrajectoryRecord]) -> Option<(f64, f64)> {
    let c: Vec<f64> = records.iter().map(|r| r.concurrence).collect();
    let n = c.len();
    let first = records.first()?;
    for k in 0..n {
        let rising = k == 0 || c[k] >= c[k - 1];
        let falling = k + 1 == n || c[k] > c[k + 1];
        if c[k] > 0.0 && rising && falling {
            return Some((records[k].t, c[k]));
        }
    }
    Some((first.t, first.concurrence))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    X,
    MuDotR,
    Delta,
    Gamma12,
    Omega12,
}

impl FromStr for SweepAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" => Ok(SweepAxis::X),
            "mu_dot_r" => Ok(SweepAxis::MuDotR),
            "delta" => Ok(SweepAxis::Delta),
            "gamma12" => Ok(SweepAxis::Gamma12),
            "omega12" => Ok(SweepAxis::Omega12),
            _ => Err(Error::Invalid(format!(
                "unknown sweep axis '{s}' (expected x, mu_dot_r, delta, gamma12 or omega12)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSummary {
    pub first_max_c: f64,
    pub t_first_max: f64,
    /// Concurrence at `Γt = LATE_TIME`.
    pub c_at_late_time: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub outcome: std::result::Result<SweepSummary, String>,
}

/// `base` with one parameter replaced.
pub fn with_axis(base: &Scenario, axis: SweepAxis, value: f64) -> Result<Scenario> {
    let mut s = base.clone();
    s.name = format!("{}[{axis:?}={value}]", base.name);
    match axis {
        SweepAxis::X | SweepAxis::MuDotR => {
            let RateSource::Geometry(g) = base.rates else {
                return Err(Error::Invalid("geometry sweep on a scenario with explicit rates".into()));
            };
            let g = match axis {
                SweepAxis::X => Geometry::new(value, g.mu_dot_r())?,
                _ => Geometry::new(g.x(), value)?,
            };
            s.rates = RateSource::Geometry(g);
        }
        SweepAxis::Delta => s.delta = value,
        SweepAxis::Gamma12 | SweepAxis::Omega12 => {
            let p = base.params()?;
            let (gamma12, omega12) = if axis == SweepAxis::Gamma12 {
                (value, p.omega12)
            } else {
                (p.gamma12, value)
            };
            s.rates = RateSource::Explicit { gamma12, omega12 };
        }
    }
    s.validate()?;
    Ok(s)
}

fn summarize(s: &Scenario) -> Result<SweepSummary> {
    let records = run_scenario(s)?;
    let (t_first_max, first_max_c) = first_maximum(&records).unwrap_or((f64::NAN, f64::NAN));
    let t0 = s.grid.t_start();
    let late_grid = if LATE_TIME > t0 {
        TimeGrid::new(t0, LATE_TIME, 2)?
    } else {
        TimeGrid::single(t0)?
    };
    let late = Scenario {
        grid: late_grid,
        ..s.clone()
    };
    let late_c = run_scenario(&late)?.last().map(|r| r.concurrence).unwrap_or(f64::NAN);
    Ok(SweepSummary {
        first_max_c,
        t_first_max,
        c_at_late_time: if LATE_TIME >= t0 { late_c } else { f64::NAN },
    })
}

/// Runs `base` once per value of `axis`; rows come back in input order and
/// a failing row does not abort the others.
pub fn sweep(base: &Scenario, axis: SweepAxis, values: &[f64]) -> Vec<SweepRow> {
    values
        .par_iter()
        .map(|&value| SweepRow {
            value,
            outcome: with_axis(base, axis, value)
                .and_then(|s| summarize(&s))
                .map_err(|e| e.to_string()),
        })
        .collect()
}

pub fn write_sweep_csv<W: Write>(w: &mut W, rows: &[SweepRow]) -> Result<()> {
    writeln!(w, "value,first_max_c,t_first_max,c_at_5,error")?;
    for row in rows {
        match &row.outcome {
            Ok(s) => writeln!(
                w,
                "{},{},{},{},",
                format_number(row.value),
                format_number(s.first_max_c),
                format_number(s.t_first_max),
                format_number(s.c_at_late_time)
            )?,
            Err(msg) => {
                let msg: String = msg.chars().map(|c| if c == ',' || c == '\n' { ';' } else { c }).collect();
                writeln!(w, "{},,,,{msg}", format_number(row.value))?
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
}

impl Figure {
    pub const ALL: [Figure; 4] = [Figure::Fig2, Figure::Fig3, Figure::Fig4, Figure::Fig5];

    pub fn name(&self) -> &'static str {
        match self {
            Figure::Fig2 => "fig2",
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
            Figure::Fig5 => "fig5",
        }
    }

    pub fn scenario(&self) -> Scenario {
        match self {
            Figure::Fig2 => Scenario::fig2(),
            Figure::Fig3 => Scenario::fig3(),
            Figure::Fig4 => Scenario::fig4(),
            Figure::Fig5 => Scenario::fig5(),
        }
    }

    pub fn columns(&self) -> &'static [&'static str] {
        match self {
            Figure::Fig2 | Figure::Fig5 => &["t", "C", "aa_minus_ss", "aa_plus_ss"],
            Figure::Fig3 => &["t", "C", "N"],
            Figure::Fig4 => &["t", "C", "N", "rho_aa"],
        }
    }
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Figure::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown figure '{s}' (expected fig2, fig3, fig4 or fig5)")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureTable {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl FigureTable {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }

    pub fn write_csv<W: Write>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "{}", self.columns.join(","))?;
        for row in &self.rows {
            write_row(w, row)?;
        }
        Ok(())
    }
}

/// Curves of one figure; `points` overrides the default grid resolution.
pub fn figure(fig: Figure, points: Option<usize>) -> Result<FigureTable> {
    let mut s = fig.scenario();
    if let Some(n) = points {
        s.grid = TimeGrid::new(s.grid.t_start(), s.grid.t_end(), n)?;
    }
    let records = run_scenario(&s)?;
    let rows = records
        .iter()
        .map(|r| match fig {
            Figure::Fig2 | Figure::Fig5 => vec![r.t, r.concurrence, r.rho_aa - r.rho_ss, r.rho_aa + r.rho_ss],
            Figure::Fig3 => vec![r.t, r.concurrence, r.negativity],
            Figure::Fig4 => vec![r.t, r.concurrence, r.negativity, r.rho_aa],
        })
        .collect();
    Ok(FigureTable {
        columns: fig.columns().to_vec(),
        rows,
    })
}
