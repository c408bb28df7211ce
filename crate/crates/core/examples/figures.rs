// Writes the four figure tables as CSV files.
//
// ```bash
// cargo run -p twoatom --example figures -- out/
// ```

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use twoatom::scenario::{figure, Figure};
use twoatom::Result;

pub fn run_example() -> Result<()> {
    run(std::env::temp_dir().join("twoatom-figures"))
}

fn run(dir: PathBuf) -> Result<()> {
    std::fs::create_dir_all(&dir)?;
    for fig in Figure::ALL {
        let table = figure(fig, None)?;
        let path = dir.join(format!("{}.csv", fig.name()));
        table.write_csv(&mut BufWriter::new(File::create(&path)?))?;
        let c = table.column("C").expect("every figure has a C column");
        let peak = c.iter().cloned().fold(0.0, f64::max);
        println!("{} -> {} ({} rows, max C {peak:.4})", fig.name(), path.display(), table.rows.len());
    }
    Ok(())
}

fn main() -> Result<()> {
    match std::env::args().nth(1) {
        Some(dir) => run(PathBuf::from(dir)),
        None => run_example(),
    }
}
