use crate::channel::{PointingGeometry, TurbulenceParams};
use crate::error::{Error, Result};
use crate::numerics::ln_gamma;

/// Poles closer than this are treated as coincident.
pub const POLE_SEPARATION: f64 = 1e-6;

/// Leading small-argument behaviour of the per-element squared-gain density.
///
/// Near the origin the density is dominated by the pole of smallest exponent
/// among `b = (c-1, α-1, β-1)`; `epsilon` is its residue coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticProfile {
    pub b: [f64; 3],
    /// Index into `b` of the dominant (smallest) exponent.
    pub dominant: usize,
    pub varrho: f64,
    pub epsilon: f64,
    pub n_elements: usize,
    /// High-SNR outage slope magnitude, `(1+ϱ)N/2`.
    pub diversity_order: f64,
}

pub fn asymptotic_profile(
    turbulence: &TurbulenceParams,
    pointing: &PointingGeometry,
    n_elements: usize,
) -> Result<AsymptoticProfile> {
    if n_elements == 0 {
        return Err(Error::Domain("at least one element is required".into()));
    }
    let c = pointing.c();
    if !c.is_finite() {
        return Err(Error::Domain("asymptotics need finite pointing jitter (c < ∞)".into()));
    }
    let b = [c - 1.0, turbulence.alpha - 1.0, turbulence.beta - 1.0];
    for i in 0..3 {
        for j in (i + 1)..3 {
            if (b[i] - b[j]).abs() <= POLE_SEPARATION {
                return Err(Error::DegenerateParameters(format!(
                    "exponents b[{i}] = {} and b[{j}] = {} coincide; the distinct-pole expansion does not apply",
                    b[i], b[j]
                )));
            }
        }
    }
    let dominant = (0..3).min_by(|&i, &j| b[i].total_cmp(&b[j])).expect("three exponents");
    let varrho = b[dominant];
    let mut ln_epsilon = -ln_gamma(c - varrho)?;
    for (j, &bj) in b.iter().enumerate() {
        if j != dominant {
            ln_epsilon += ln_gamma(bj - varrho)?;
        }
    }
    Ok(AsymptoticProfile {
        b,
        dominant,
        varrho,
        epsilon: ln_epsilon.exp(),
        n_elements,
        diversity_order: (1.0 + varrho) * n_elements as f64 / 2.0,
    })
}

/// Natural log of the high-SNR outage probability
///
/// ```text
/// P ≈ K^N γ_th^d / (Γ(d)·d),  d = (1+ϱ)N/2,
/// K = ε c α^{1+ϱ} β^{1+ϱ} Γ((1+ϱ)/2) / (2 Γ(α)Γ(β) A₀^{1+ϱ} γ̄^{(1+ϱ)/2})
/// ```
///
/// Returns `-∞` for `γ_th = 0`.
pub fn ln_asymptotic_outage(
    gamma_th: f64,
    profile: &AsymptoticProfile,
    turbulence: &TurbulenceParams,
    pointing: &PointingGeometry,
    gamma_bar: f64,
    n_elements: usize,
) -> Result<f64> {
    if !(gamma_th >= 0.0) || !(gamma_bar > 0.0) || n_elements == 0 {
        return Err(Error::Domain(format!(
            "asymptotic outage needs gamma_th >= 0, gamma_bar > 0, N >= 1; got ({gamma_th}, {gamma_bar}, {n_elements})"
        )));
    }
    if gamma_th == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    let (a, b, c) = (turbulence.alpha, turbulence.beta, pointing.c());
    let e = 1.0 + profile.varrho;
    let ln_k = profile.epsilon.ln() + c.ln() + e * (a.ln() + b.ln()) + ln_gamma(0.5 * e)?
        - std::f64::consts::LN_2
        - ln_gamma(a)?
        - ln_gamma(b)?
        - e * pointing.a0().ln()
        - 0.5 * e * gamma_bar.ln();
    let n = n_elements as f64;
    let d = 0.5 * e * n;
    Ok(n * ln_k + d * gamma_th.ln() - ln_gamma(d)? - d.ln())
}

/// High-SNR outage probability; see [`ln_asymptotic_outage`]. Not clamped:
/// at low SNR the power law exceeds one.
pub fn asymptotic_outage(
    gamma_th: f64,
    profile: &AsymptoticProfile,
    turbulence: &TurbulenceParams,
    pointing: &PointingGeometry,
    gamma_bar: f64,
    n_elements: usize,
) -> Result<f64> {
    Ok(ln_asymptotic_outage(gamma_th, profile, turbulence, pointing, gamma_bar, n_elements)?.exp())
}
