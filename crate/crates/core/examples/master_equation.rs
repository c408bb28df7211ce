// The full 4x4 master equation against the collective equations of motion
// and the closed-form solution.

use num_complex::Complex64;
use twoatom::dynamics::{evolve_analytic_grid, evolve_block_ode, evolve_full_master};
use twoatom::statespace::{is_block_form, to_collective};
use twoatom::{BlockState, Result, Scenario, TimeGrid};

pub fn run_example() -> Result<()> {
    let p = Scenario::fig2().params()?;
    let grid = TimeGrid::new(0.0, 4.0, 41)?;
    let b0 = BlockState::new(0.1, 0.2, 0.45, 0.25, Complex64::new(0.05, 0.1), Complex64::new(0.1, -0.2))?;
    let c0 = to_collective(&b0);

    let closed = evolve_analytic_grid(&c0, &p, &grid)?;
    let ode = evolve_block_ode(&c0, &p, &grid)?;
    let full = evolve_full_master(&b0.to_density(), &p, &grid)?;

    let mut worst_ode = 0.0_f64;
    let mut worst_full = 0.0_f64;
    for ((a, o), m) in closed.iter().zip(&ode).zip(&full) {
        assert!(is_block_form(m, 1e-12));
        worst_ode = worst_ode.max(a.max_abs_diff(o));
        worst_full = worst_full.max(a.max_abs_diff(&to_collective(&m.to_block(1e-12)?)));
    }
    println!("closed form vs collective ODE: {worst_ode:.2e}");
    println!("closed form vs full master equation: {worst_full:.2e}");

    let last = full.last().expect("non-empty grid").validate();
    println!(
        "final state: trace error {:.1e}, min eigenvalue {:.3e}",
        last.trace, last.min_eigenvalue
    );
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
