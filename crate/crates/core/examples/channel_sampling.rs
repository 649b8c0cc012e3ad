// Draws per-element channel gains and compares sample moments with the
// analytic ones.

use risfso::analytic::MomentSummary;
use risfso::channel::{default_pointing, ChannelSampler, StreamFamily, TurbulenceParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Shapes from a 5e-14 m^-2/3 structure constant over 300 m at 1550 nm.
    let turbulence = TurbulenceParams::derive(5e-14, 1550e-9, 300.0, 0.1)?;
    let pointing = default_pointing();
    println!("alpha = {:.3}, beta = {:.3}", turbulence.alpha, turbulence.beta);
    println!("A0 = {:.6}, c = {:.6}", pointing.a0(), pointing.c());

    let sampler = ChannelSampler::new(&turbulence, &pointing)?;
    let family = StreamFamily::new(2024);
    let draws = 100_000u64;
    let (mut s1, mut s2) = (0.0, 0.0);
    for j in 0..draws {
        let b = sampler.b(&mut family.stream(j));
        s1 += b;
        s2 += b * b;
    }
    let mean = s1 / draws as f64;
    let var = s2 / draws as f64 - mean * mean;

    let ms = MomentSummary::from_channel(&turbulence, &pointing, 1)?;
    println!("E[B]   sample {mean:.6e}  analytic {:.6e}", ms.m1);
    println!("Var[B] sample {var:.6e}  analytic {:.6e}", ms.delta1_sq);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
