use std::f64::consts::{LN_2, PI};

use super::{PointingGeometry, TurbulenceParams};
use crate::error::{Error, Result};
use crate::numerics::{bessel_k, ln_gamma, meijer_g_1330, MellinBarnesContour, Quadrature};

/// Gamma-Gamma density of the turbulence gain,
/// `2(αβ)^{(α+β)/2} h^{(α+β)/2-1} K_{α-β}(2√(αβh)) / (Γ(α)Γ(β))`.
pub fn pdf_h_a(h: f64, turbulence: &TurbulenceParams) -> Result<f64> {
    if h.is_nan() {
        return Err(Error::Domain("pdf_h_a at NaN".into()));
    }
    if h <= 0.0 || h.is_infinite() {
        return Ok(0.0);
    }
    let (a, b) = (turbulence.alpha, turbulence.beta);
    let ab = a * b;
    let half_sum = 0.5 * (a + b);
    let k = bessel_k(a - b, 2.0 * (ab * h).sqrt())?;
    if k == 0.0 {
        return Ok(0.0);
    }
    let ln_pdf = LN_2 + half_sum * ab.ln() - ln_gamma(a)? - ln_gamma(b)? + (half_sum - 1.0) * h.ln() + k.ln();
    Ok(ln_pdf.exp())
}

/// `P(h_a ≤ h)` by quadrature of [`pdf_h_a`].
pub fn cdf_h_a(h: f64, turbulence: &TurbulenceParams) -> Result<f64> {
    if h <= 0.0 {
        return Ok(0.0);
    }
    let q = Quadrature {
        abs_tol: 1e-13,
        rel_tol: 1e-11,
        max_subdivisions: 2000,
    };
    let pdf = |x: f64| pdf_h_a(x, turbulence).unwrap_or(f64::NAN);
    // The bulk sits near 1; split there so both sides resolve cleanly.
    let value = if h > 1.0 {
        1.0 - q.integrate_with_breaks(pdf, h, f64::INFINITY, &[])?.value
    } else {
        q.integrate(pdf, 0.0, h)?.value
    };
    Ok(value.clamp(0.0, 1.0))
}

/// Density of the squared composite gain `B = (h_a·h_p)²`:
///
/// ```text
/// f_B(x) = αβc / (2√x Γ(α)Γ(β) A₀) · G^{3,0}_{1,3}(αβ√x/A₀ | c; c-1, α-1, β-1)
/// ```
pub fn pdf_b(x: f64, turbulence: &TurbulenceParams, pointing: &PointingGeometry) -> Result<f64> {
    pdf_b_with_contour(x, turbulence, pointing, &MellinBarnesContour::default())
}

/// [`pdf_b`] with an explicit Mellin–Barnes contour.
pub fn pdf_b_with_contour(
    x: f64,
    turbulence: &TurbulenceParams,
    pointing: &PointingGeometry,
    contour: &MellinBarnesContour,
) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("pdf_b at NaN".into()));
    }
    if x <= 0.0 || x.is_infinite() {
        return Ok(0.0);
    }
    let c = pointing.c();
    if !c.is_finite() {
        return Err(Error::Domain("pdf_b needs finite pointing jitter (c < ∞)".into()));
    }
    let (a, b, a0) = (turbulence.alpha, turbulence.beta, pointing.a0());
    let arg = a * b * x.sqrt() / a0;
    let g = meijer_g_1330(c, [c - 1.0, a - 1.0, b - 1.0], arg, contour)?;
    let ln_coeff = (a * b * c / (2.0 * a0)).ln() - 0.5 * x.ln() - ln_gamma(a)? - ln_gamma(b)?;
    Ok((ln_coeff.exp() * g).max(0.0))
}

/// Gaussian approximation of the density of `γ = γ̄Z`, with mean `γ̄m` and
/// standard deviation `γ̄δ`. Returns NaN unless `delta2 > 0` and
/// `gamma_bar > 0`.
pub fn pdf_gamma_clt(x: f64, m: f64, delta2: f64, gamma_bar: f64) -> f64 {
    if !(delta2 > 0.0 && gamma_bar > 0.0) {
        return f64::NAN;
    }
    let sd = gamma_bar * delta2.sqrt();
    let u = (x - gamma_bar * m) / sd;
    (-0.5 * u * u).exp() / (sd * (2.0 * PI).sqrt())
}
