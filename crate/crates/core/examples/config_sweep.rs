// Parses a sweep description, runs it with simulation, and reports the
// analytic and simulated columns side by side.

use risfso::sweep::{parse_config, run_sweep};

const CONFIG: &str = "
# weaker turbulence, a few element counts
turbulence.alpha = 8
turbulence.beta = 4
link.n_elements = 4, 16
link.gamma_bar_db = 30:5:40
sweep.metrics = outage, capacity
mc.samples = 5000
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = parse_config(CONFIG)?;
    let table = run_sweep(&spec, 2)?;
    for row in &table.rows {
        println!(
            "{:>4} dB N={:<3} {:<9} analytic {:>10.4e}  simulated {:>10.4e} ± {:.1e}",
            row.gamma_bar_db,
            row.n_elements,
            row.metric,
            row.analytic.unwrap_or(f64::NAN),
            row.mc_mean.unwrap_or(f64::NAN),
            row.mc_stderr.unwrap_or(f64::NAN),
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
