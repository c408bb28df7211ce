// First-maximum concurrence as the separation grows. Rows are computed in
// parallel and returned in input order.

use twoatom::scenario::{sweep, SweepAxis};
use twoatom::{Result, Scenario, TimeGrid};

pub fn run_example() -> Result<()> {
    let mut base = Scenario::fig2();
    base.grid = TimeGrid::new(0.0, 5.0, 2001)?;
    let xs: Vec<f64> = (1..=12).map(|k| 0.25 * k as f64).collect();

    println!("{:>6} {:>10} {:>8} {:>10}", "x", "first max", "at Γt", "C(Γt=5)");
    for row in sweep(&base, SweepAxis::X, &xs) {
        match row.outcome {
            Ok(s) => println!(
                "{:>6.2} {:>10.4} {:>8.3} {:>10.4}",
                row.value, s.first_max_c, s.t_first_max, s.c_at_late_time
            ),
            Err(e) => println!("{:>6.2} failed: {e}", row.value),
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
