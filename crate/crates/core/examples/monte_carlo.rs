// Simulated outage with a confidence interval, built from two independently
// run halves that merge into the full-run result.

use risfso::analytic::{outage_probability, MomentSummary};
use risfso::channel::{default_pointing, default_turbulence};
use risfso::db_to_linear;
use risfso::montecarlo::{estimate_span, MetricKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (t, g) = (default_turbulence(), default_pointing());
    let n = 16;
    let gamma_bars = [db_to_linear(28.0)];
    let kind = [MetricKind::Outage { gamma_th: 1.0 }];
    let seed = 7;

    let first = estimate_span(&kind, &t, &g, n, &gamma_bars, seed, 0..10_000, 1)?;
    let second = estimate_span(&kind, &t, &g, n, &gamma_bars, seed, 10_000..20_000, 1)?;
    let merged = first[0][0].merge(&second[0][0])?;
    let whole = estimate_span(&kind, &t, &g, n, &gamma_bars, seed, 0..20_000, 1)?;
    assert_eq!(merged.sum().to_bits(), whole[0][0].sum().to_bits());

    let (lo, hi) = merged.confidence_interval(0.95)?;
    let ms = MomentSummary::from_channel(&t, &g, n)?;
    let analytic = outage_probability(1.0, &ms, gamma_bars[0]).value;
    println!(
        "simulated outage {:.5} (95% CI {lo:.5} .. {hi:.5}), Gaussian model {analytic:.5}",
        merged.mean()
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
