// High-SNR outage slope under strong pointing jitter.

use risfso::analytic::{asymptotic_outage, asymptotic_profile};
use risfso::channel::{PointingGeometry, TurbulenceParams};
use risfso::db_to_linear;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = TurbulenceParams::new(6.5, 6.0)?;
    let g = PointingGeometry::derive(20e-3, 20e-3, 150.0, 150.0, 1.2, 0.1)?.with_c(0.5)?;
    for n in [1, 2, 4] {
        let p = asymptotic_profile(&t, &g, n)?;
        let at = |db: f64| asymptotic_outage(1.0, &p, &t, &g, db_to_linear(db), n);
        let (lo, hi) = (at(60.0)?, at(80.0)?);
        let slope = (hi.log10() - lo.log10()) / 20.0;
        println!(
            "N = {n}: diversity {:.2}, P(60 dB) = {lo:.3e}, P(80 dB) = {hi:.3e}, slope {slope:.4} per dB",
            p.diversity_order
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
