// One atom initially excited: the collective couplings transfer part of the
// excitation into the slowly decaying antisymmetric state, and the atoms
// become entangled while they radiate.

use twoatom::entanglement::closed_form_c2_single;
use twoatom::scenario::{first_maximum, run_scenario};
use twoatom::{Result, Scenario, TimeGrid};

pub fn run_example() -> Result<()> {
    let mut s = Scenario::fig2();
    s.grid = TimeGrid::new(0.0, 10.0, 5001)?;
    let p = s.params()?;
    println!("Γ12 = {:.6}, Ω12 = {:.6}", p.gamma12, p.omega12);

    let records = run_scenario(&s)?;
    if let Some((t, c)) = first_maximum(&records) {
        println!("first maximum C = {c:.4} at Γt = {t:.4}");
    }

    println!("{:>6} {:>9} {:>9} {:>9} {:>9} {:>9}", "Γt", "C", "N", "ρaa", "ρss", "closed");
    for r in records.iter().step_by(500) {
        println!(
            "{:>6.2} {:>9.5} {:>9.5} {:>9.5} {:>9.5} {:>9.5}",
            r.t,
            r.concurrence,
            r.negativity,
            r.rho_aa,
            r.rho_ss,
            closed_form_c2_single(&p, r.t)?
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
