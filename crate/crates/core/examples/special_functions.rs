// Tour of the special functions behind the closed forms.

use risfso::numerics::{
    bessel_k, erfc, ln_gamma, meijer_g_1330, normal_quantile, parabolic_cylinder_d, MellinBarnesContour,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("lnΓ(15)      = {:.15}", ln_gamma(15.0)?);
    println!("erfc(10)     = {:e}", erfc(10.0));
    println!("z(0.975)     = {:.12}", normal_quantile(0.975)?);

    for (nu, x) in [(0.5, 1.0), (5.0, 2.0), (20.0, 0.001)] {
        println!("K_{nu}({x}) = {:e}", bessel_k(nu, x)?);
    }
    // D_{-1/2} and D_{-3} are the orders that appear in the second and
    // fourth SNR moments.
    for (v, z) in [(-0.5, 2.0), (-3.0, -2.5), (-11.0, 40.0)] {
        println!("D_{v}({z}) = {:e}", parabolic_cylinder_d(v, z)?);
    }

    let c = 3.223_372_913_064_751;
    let b = [c - 1.0, 14.0, 9.0];
    for y in [5.0, 20.0, 150.0] {
        let coarse = meijer_g_1330(c, b, y, &MellinBarnesContour::default())?;
        let fine = meijer_g_1330(c, b, y, &MellinBarnesContour::with_node_count(1024))?;
        println!("G({y:>5}) = {coarse:.10e}  (1024 nodes: {fine:.10e})");
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
