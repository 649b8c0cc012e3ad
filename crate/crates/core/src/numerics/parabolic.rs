//! Parabolic cylinder function `D_v(z)` for non-positive order.
//!
//! For `v < 0` with `p = -v`:
//!
//! ```text
//! D_v(z) = e^{-z²/4} / Γ(p) ∫₀^∞ t^{p-1} e^{-t²/2 - z t} dt
//! ```
//!
//! evaluated by adaptive quadrature. For `z < 0` the integrand peaks far
//! from the origin, so the scaled form
//! `e^{-z²/4} D_v(z) = 1/Γ(p) ∫₀^∞ t^{p-1} e^{-(t+z)²/2} dt` is integrated
//! instead, with break points placed around the peak.

use crate::error::{Error, Result};
use crate::numerics::gamma::ln_gamma_unchecked;
use crate::numerics::quadrature::Quadrature;

pub const MIN_ORDER: f64 = -12.0;
pub const MAX_ORDER: f64 = 0.0;
pub const MAX_ABS_ARGUMENT: f64 = 40.0;

const KERNEL_QUADRATURE: Quadrature = Quadrature {
    abs_tol: f64::MIN_POSITIVE,
    rel_tol: 1e-13,
    max_subdivisions: 4000,
};

fn check_domain(v: f64, z: f64) -> Result<()> {
    if !v.is_finite() || !z.is_finite() {
        return Err(Error::Domain(format!(
            "parabolic_cylinder_d needs finite arguments, got ({v}, {z})"
        )));
    }
    if !(MIN_ORDER..=MAX_ORDER).contains(&v) || z.abs() > MAX_ABS_ARGUMENT {
        return Err(Error::UnsupportedDomain(format!(
            "parabolic_cylinder_d implemented for v in [{MIN_ORDER}, {MAX_ORDER}], |z| <= {MAX_ABS_ARGUMENT}; got ({v}, {z})"
        )));
    }
    Ok(())
}

/// Location of the interior maximum of `t^{p-1} e^{-(t+z)²/2}`, if any.
fn kernel_peak(p: f64, z: f64) -> Option<f64> {
    let disc = z * z + 4.0 * (p - 1.0);
    if disc < 0.0 {
        return None;
    }
    let t = 0.5 * (-z + disc.sqrt());
    (t > 0.0).then_some(t)
}

/// `∫₀^∞ t^{p-1} e^{-φ(t)} dt` with `φ(t) = (t+z)²/2` when `shifted`, else
/// `t²/2 + z t`.
fn kernel_integral(p: f64, z: f64, shifted: bool) -> Result<f64> {
    let phase = move |t: f64| {
        if shifted {
            0.5 * (t + z) * (t + z)
        } else {
            t * (0.5 * t + z)
        }
    };
    let integrand = move |t: f64| {
        if t <= 0.0 {
            return 0.0;
        }
        ((p - 1.0) * t.ln() - phase(t)).exp()
    };

    // [0, 1]: for p < 1 substitute u = t^p to remove the endpoint singularity.
    let head = if p < 1.0 {
        let inv_p = 1.0 / p;
        KERNEL_QUADRATURE
            .integrate(move |u: f64| (-phase(u.powf(inv_p))).exp(), 0.0, 1.0)?
            .value
            * inv_p
    } else {
        KERNEL_QUADRATURE.integrate(integrand, 0.0, 1.0)?.value
    };

    let mut breaks = Vec::new();
    if let Some(peak) = kernel_peak(p, z) {
        let width = 1.0 / (1.0 + (p - 1.0).abs() / (peak * peak)).sqrt();
        for k in [-12.0, -6.0, -3.0, 0.0, 3.0, 6.0, 12.0] {
            breaks.push(peak + k * width);
        }
    }
    let tail = KERNEL_QUADRATURE.integrate_with_breaks(integrand, 1.0, f64::INFINITY, &breaks)?;
    Ok(head + tail.value)
}

/// Parabolic cylinder function `D_v(z)` for `v ∈ [-12, 0]`, `|z| ≤ 40`.
pub fn parabolic_cylinder_d(v: f64, z: f64) -> Result<f64> {
    check_domain(v, z)?;
    if v == 0.0 {
        return Ok((-0.25 * z * z).exp());
    }
    let p = -v;
    let ln_norm = -ln_gamma_unchecked(p);
    if z >= 0.0 {
        let integral = kernel_integral(p, z, false)?;
        Ok(integral * (ln_norm - 0.25 * z * z).exp())
    } else {
        let integral = kernel_integral(p, z, true)?;
        Ok(integral * (ln_norm + 0.25 * z * z).exp())
    }
}

/// `e^{-z²/4} D_v(z)`, which stays representable where `D_v` itself would
/// overflow for large negative `z`.
pub fn parabolic_cylinder_d_scaled(v: f64, z: f64) -> Result<f64> {
    check_domain(v, z)?;
    if v == 0.0 {
        return Ok((-0.5 * z * z).exp());
    }
    let p = -v;
    let ln_norm = -ln_gamma_unchecked(p);
    if z >= 0.0 {
        let integral = kernel_integral(p, z, false)?;
        Ok(integral * (ln_norm - 0.5 * z * z).exp())
    } else {
        let integral = kernel_integral(p, z, true)?;
        Ok(integral * ln_norm.exp())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::erf::erfc;
    use std::f64::consts::{PI, SQRT_2};

    #[test]
    fn order_zero_is_gaussian() {
        for &z in &[-7.0f64, -1.0, 0.0, 2.5, 30.0] {
            assert_eq!(parabolic_cylinder_d(0.0, z).unwrap(), (-0.25 * z * z).exp());
        }
    }

    #[test]
    fn order_minus_one_is_scaled_erfc() {
        for &z in &[-20.0f64, -6.0, -1.5, 0.0, 0.7, 4.0, 12.0] {
            let expected = (0.25 * z * z).exp() * (PI / 2.0).sqrt() * erfc(z / SQRT_2);
            let got = parabolic_cylinder_d(-1.0, z).unwrap();
            assert!((got / expected - 1.0).abs() < 1e-10, "z={z}: {got} vs {expected}");
        }
    }

    #[test]
    fn value_at_origin() {
        // D_v(0) = 2^{v/2} √π / Γ((1-v)/2)
        for &v in &[-0.3, -1.0, -2.5, -7.0, -12.0] {
            let expected = 2f64.powf(0.5 * v) * PI.sqrt() / ln_gamma_unchecked(0.5 * (1.0 - v)).exp();
            let got = parabolic_cylinder_d(v, 0.0).unwrap();
            assert!((got / expected - 1.0).abs() < 1e-10, "v={v}");
        }
    }

    #[test]
    fn outside_domain_is_unsupported() {
        assert!(matches!(
            parabolic_cylinder_d(0.5, 1.0),
            Err(Error::UnsupportedDomain(_))
        ));
        assert!(matches!(
            parabolic_cylinder_d(-13.0, 1.0),
            Err(Error::UnsupportedDomain(_))
        ));
        assert!(matches!(
            parabolic_cylinder_d(-2.0, 41.0),
            Err(Error::UnsupportedDomain(_))
        ));
        assert!(matches!(parabolic_cylinder_d(-2.0, f64::NAN), Err(Error::Domain(_))));
    }

    #[test]
    fn scaled_matches_unscaled() {
        for &(v, z) in &[(-1.0, -3.0), (-4.0, 2.0), (-0.4, -10.0), (-11.0, -25.0)] {
            let d = parabolic_cylinder_d(v, z).unwrap();
            let s = parabolic_cylinder_d_scaled(v, z).unwrap();
            assert!((s / (d * (-0.25 * z * z).exp()) - 1.0).abs() < 1e-12);
        }
    }
}
