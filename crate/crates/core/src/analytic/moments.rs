use std::f64::consts::PI;

use crate::channel::{PointingGeometry, TurbulenceParams};
use crate::error::{Error, Result};
use crate::numerics::{ln_gamma, parabolic_cylinder_d_scaled, PCF_MAX_ABS_ARGUMENT};

/// Largest moment order with a closed form.
pub const MAX_MOMENT_ORDER: u32 = 10;

/// First two moments of the per-element squared gain `B = h²` and of the
/// aggregate `Z = Σ B_k` over `n_elements` independent elements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSummary {
    pub m1: f64,
    pub delta1_sq: f64,
    pub n_elements: usize,
    pub m: f64,
    pub delta_sq: f64,
}

impl MomentSummary {
    pub fn new(m1: f64, delta1_sq: f64, n_elements: usize) -> Result<Self> {
        if !(m1 > 0.0 && m1.is_finite() && delta1_sq > 0.0 && delta1_sq.is_finite()) {
            return Err(Error::Domain(format!(
                "moments must be positive and finite, got m1={m1}, delta1_sq={delta1_sq}"
            )));
        }
        if n_elements == 0 {
            return Err(Error::Domain("at least one element is required".into()));
        }
        let n = n_elements as f64;
        Ok(Self {
            m1,
            delta1_sq,
            n_elements,
            m: n * m1,
            delta_sq: n * delta1_sq,
        })
    }

    /// Closed-form moments: `E[B] = A₀² c/(c+2) E[h_a²]` and
    /// `E[B²] = A₀⁴ c/(c+4) E[h_a⁴]`.
    pub fn from_channel(turbulence: &TurbulenceParams, pointing: &PointingGeometry, n_elements: usize) -> Result<Self> {
        let (a, b, c) = (turbulence.alpha, turbulence.beta, pointing.c());
        let m1 = pointing.moment(2.0) * turbulence.second_moment();
        // E[B²]/m₁² - 1 in log form, which stays accurate when the variance is
        // small next to the mean.
        let ln_ratio = (4.0 / (c * (c + 4.0))).ln_1p() + (2.0 / a).ln_1p() + (3.0 / a).ln_1p() - (1.0 / a).ln_1p()
            + (2.0 / b).ln_1p()
            + (3.0 / b).ln_1p()
            - (1.0 / b).ln_1p();
        let delta1_sq = m1 * m1 * ln_ratio.exp_m1();
        Self::new(m1, delta1_sq, n_elements)
    }

    pub fn with_elements(&self, n_elements: usize) -> Result<Self> {
        Self::new(self.m1, self.delta1_sq, n_elements)
    }

    pub fn delta(&self) -> f64 {
        self.delta_sq.sqrt()
    }

    /// Mean-to-spread ratio `m/δ` of the aggregate.
    pub fn snr_ratio(&self) -> f64 {
        self.m / self.delta()
    }
}

/// `E[γⁿ]` under the Gaussian model truncated to `γ ≥ 0`:
/// `(γ̄δ)ⁿ n!/√(2π) · e^{-m²/4δ²} D_{-n-1}(-m/δ)`.
pub fn generalized_moment(n: u32, ms: &MomentSummary, gamma_bar: f64) -> Result<f64> {
    if n > MAX_MOMENT_ORDER {
        return Err(Error::UnsupportedDomain(format!(
            "moment order {n} exceeds the supported maximum {MAX_MOMENT_ORDER}"
        )));
    }
    if !(gamma_bar > 0.0) {
        return Err(Error::Domain(format!("average SNR must be positive, got {gamma_bar}")));
    }
    let z = -ms.snr_ratio();
    if z.abs() > PCF_MAX_ABS_ARGUMENT {
        return Err(Error::UnsupportedDomain(format!(
            "m/δ = {} is outside the supported range ±{PCF_MAX_ABS_ARGUMENT}",
            -z
        )));
    }
    let scaled = parabolic_cylinder_d_scaled(-(n as f64) - 1.0, z)?;
    let nf = n as f64;
    let ln_prefix = nf * (gamma_bar * ms.delta()).ln() + ln_gamma(nf + 1.0)? - 0.5 * (2.0 * PI).ln();
    Ok(ln_prefix.exp() * scaled)
}

/// `n`-th order amount of fading, `E[γⁿ]/E[γ]ⁿ - 1`.
pub fn amount_of_fading(n: u32, ms: &MomentSummary, gamma_bar: f64) -> Result<f64> {
    let mean = generalized_moment(1, ms, gamma_bar)?;
    let moment = generalized_moment(n, ms, gamma_bar)?;
    Ok(moment / mean.powi(n as i32) - 1.0)
}
