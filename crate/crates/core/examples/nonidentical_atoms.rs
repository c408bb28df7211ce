// Detuned atoms. A frequency difference couples the symmetric and
// antisymmetric states, which changes how much entanglement builds up.

use twoatom::scenario::{first_maximum, run_scenario};
use twoatom::{Result, Scenario};

pub fn run_example() -> Result<()> {
    println!("{:>8} {:>10} {:>10} {:>12}", "Δ/Γ", "first max", "at Γt", "C(Γt=3)");
    for delta in [0.0, 1.0, 2.5, 5.0, 10.0, -5.0, -10.0] {
        let s = Scenario {
            delta,
            ..Scenario::fig5()
        };
        let records = run_scenario(&s)?;
        let (t, c) = first_maximum(&records).expect("non-empty grid");
        let last = records.last().expect("non-empty grid");
        println!("{delta:>8.1} {c:>10.4} {t:>10.4} {:>12.5}", last.concurrence);
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
