// One block state written in the product, Bell and collective bases.

use num_complex::Complex64;
use twoatom::statespace::{from_bell, from_collective, to_bell, to_collective};
use twoatom::{BlockState, Result};

pub fn run_example() -> Result<()> {
    let b = BlockState::new(0.1, 0.2, 0.3, 0.4, Complex64::new(0.05, 0.1), Complex64::new(0.2, -0.1))?;
    println!("product basis:    {b:?}");

    let bell = to_bell(&b);
    println!("Bell basis:       {bell:?}");
    let c = to_collective(&b);
    println!("collective basis: {c:?}");
    println!("|s> and |a> populations: {:.4} {:.4}", c.rss, c.raa);

    let back = from_bell(&bell);
    println!("round trip through Bell basis, max error {:.1e}", back.max_abs_diff(&b));
    let back = from_collective(&c);
    println!("round trip through collective basis, max error {:.1e}", back.max_abs_diff(&b));

    let full = b.to_density();
    let diag = full.validate();
    println!("4x4 matrix valid: {} (min eigenvalue {:.4})", diag.is_valid(), diag.min_eigenvalue);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
