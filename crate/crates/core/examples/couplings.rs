// Collective damping and dipole-dipole shift as functions of separation.
//
// ```bash
// cargo run -p twoatom --example couplings
// ```

use std::f64::consts::PI;

use twoatom::couplings::{collective_damping, dipole_dipole_shift, rates_from_geometry};
use twoatom::{Geometry, Result};

pub fn run_example() -> Result<()> {
    println!("{:>8} {:>12} {:>12} {:>12} {:>12}", "r/λ", "Γ12 (⊥)", "Ω12 (⊥)", "Γ12 (∥)", "Ω12 (∥)");
    for r in [0.02, 1.0 / 12.0, 0.15, 0.25, 0.5, 1.0, 2.0] {
        let perp = Geometry::from_wavelengths(r, 0.0)?;
        let par = Geometry::from_wavelengths(r, 1.0)?;
        println!(
            "{r:>8.4} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            collective_damping(&perp),
            dipole_dipole_shift(&perp)?,
            collective_damping(&par),
            dipole_dipole_shift(&par)?,
        );
    }

    let rates = rates_from_geometry(&Geometry::perpendicular(PI / 6.0)?, 1.0)?;
    println!("\nλ/12, perpendicular dipoles: {rates:?}");
    println!("symmetric state decays at Γ+Γ12 = {:.4}", rates.gamma + rates.gamma12);
    println!("antisymmetric state decays at Γ−Γ12 = {:.4}", rates.gamma - rates.gamma12);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
