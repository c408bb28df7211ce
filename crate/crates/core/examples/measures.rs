// Concurrence and negativity: closed forms for block states next to the
// generic Wootters and partial-transpose routes.

use num_complex::Complex64;
use twoatom::entanglement::{concurrence_alternatives, negativity_generic, wootters_generic};
use twoatom::{BlockState, EntanglementReport, Result};

pub fn run_example() -> Result<()> {
    let states = [
        ("ground", BlockState::ground()),
        ("symmetric", BlockState::symmetric()),
        ("antisymmetric", BlockState::antisymmetric()),
        ("atom 1 excited", BlockState::atom1_excited()),
        ("maximally mixed", BlockState::maximally_mixed()),
        (
            "half-coherent one-excitation",
            BlockState {
                r34: Complex64::new(0.25, 0.0),
                ..BlockState::diagonal(0.0, 0.0, 0.5, 0.5)
            },
        ),
        (
            "Werner-like",
            BlockState {
                r12: Complex64::new(0.3, 0.0),
                ..BlockState::diagonal(0.4, 0.4, 0.1, 0.1)
            },
        ),
    ];

    println!("{:<30} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}", "state", "C", "Wootters", "N", "PT", "C1", "C2");
    for (name, b) in states {
        let report = EntanglementReport::from_block(&b);
        let alt = concurrence_alternatives(&b);
        let m = b.to_density();
        println!(
            "{name:<30} {:>8.4} {:>8.4} {:>8.4} {:>8.4} {:>8.4} {:>8.4}",
            report.concurrence,
            wootters_generic(&m)?,
            report.negativity,
            negativity_generic(&m)?,
            alt.c1,
            alt.c2,
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
