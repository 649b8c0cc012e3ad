// Outage, BER and capacity in closed form, next to direct quadrature.

use risfso::analytic::{average_ber, channel_capacity, oracle_metric, outage_probability, MomentSummary, OracleKind};
use risfso::channel::{default_pointing, default_turbulence};
use risfso::db_to_linear;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (t, g) = (default_turbulence(), default_pointing());
    let gamma_bar = db_to_linear(25.0);
    println!(
        "{:>5} {:>12} {:>12} {:>12} {:>10}",
        "N", "outage", "ber", "capacity", "oracle"
    );
    for n in [1, 16, 64, 128, 256] {
        let ms = MomentSummary::from_channel(&t, &g, n)?;
        let out = outage_probability(1.0, &ms, gamma_bar).value;
        let ber = average_ber(1.0, &ms, gamma_bar)?.value;
        let cap = channel_capacity(&ms, gamma_bar)?.bits;
        let exact = oracle_metric(OracleKind::Capacity, &ms, gamma_bar)?.value;
        println!("{n:>5} {out:>12.4e} {ber:>12.4e} {cap:>12.6} {exact:>10.6}");
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
