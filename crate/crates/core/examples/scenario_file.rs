// Read a scenario file, evolve it and write the trajectory as CSV.
//
// ```bash
// cargo run -p twoatom --example scenario_file -- crates/core/scenarios/detuned.scn
// ```

use std::io::Write;

use twoatom::scenario::{run_scenario, write_trajectory_csv};
use twoatom::{Result, Scenario};

const INLINE: &str = "
name = inline
initial = symmetric
x = 1.0
mu_dot_r = 0.5
t_end = 2
points = 5
outputs = concurrence, populations
";

pub fn run_example() -> Result<()> {
    run(None)
}

fn run(path: Option<String>) -> Result<()> {
    let s = match path {
        Some(path) => Scenario::from_file(path)?,
        None => Scenario::parse(INLINE)?,
    };
    eprintln!("{}", s.to_text());
    let records = run_scenario(&s)?;
    let mut out = std::io::stdout().lock();
    write_trajectory_csv(&mut out, &records, &s.outputs)?;
    out.flush()?;
    Ok(())
}

fn main() -> Result<()> {
    run(std::env::args().nth(1))
}
