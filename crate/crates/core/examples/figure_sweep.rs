// Runs the beam-width preset and prints the table as CSV.

use risfso::sweep::{run_sweep, to_csv, FigurePreset, SweepSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut spec = SweepSpec::preset(FigurePreset::Fig3);
    spec.gamma_bar_db = (8..=24).step_by(4).map(f64::from).collect();
    let table = run_sweep(&spec, 1)?;
    print!("{}", to_csv(&table));
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
