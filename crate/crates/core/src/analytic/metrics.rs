use std::f64::consts::SQRT_2;

use super::MomentSummary;
use crate::error::{Error, Result};
use crate::numerics::{erf_diff, erfc, erfcx};

/// A probability or rate after clamping to its valid range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Clamped {
    pub value: f64,
    /// Whether the raw value fell outside the range.
    pub clamped: bool,
}

impl Clamped {
    fn new(raw: f64, lo: f64, hi: f64) -> Self {
        let value = raw.clamp(lo, hi);
        Self {
            value,
            clamped: value != raw,
        }
    }
}

/// Coefficients of `log₂(1+x) ≈ Σ ηᵢ e^{-ζᵢ x}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityFit {
    pub eta: [f64; 4],
    pub zeta: [f64; 4],
}

pub const CAPACITY_FIT: CapacityFit = CapacityFit {
    eta: [9.331, -2.635, -4.032, -2.388],
    zeta: [0.000, 0.037, 0.004, 0.274],
};

/// Mean SNR above which the exponential fit of `log₂(1+x)` is no longer
/// trusted.
pub const CAPACITY_FIT_LIMIT: f64 = 1e3;

impl CapacityFit {
    pub fn approx_log2_1p(&self, x: f64) -> f64 {
        self.eta.iter().zip(&self.zeta).map(|(e, z)| e * (-z * x).exp()).sum()
    }
}

/// Capacity in bits per channel use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityEstimate {
    pub bits: f64,
    /// Set when the mean SNR `γ̄m` exceeds [`CAPACITY_FIT_LIMIT`].
    pub outside_fit_window: bool,
    pub clamped: bool,
}

/// `E[e^{-sγ}]` under the Gaussian model truncated to `γ ≥ 0`:
/// `½ exp(s²γ̄²δ²/2 - sγ̄m) erfc(sγ̄δ/√2 - m/(√2δ))`.
pub fn mgf(s: f64, ms: &MomentSummary, gamma_bar: f64) -> Result<f64> {
    if !(s >= 0.0) || s.is_infinite() {
        return Err(Error::Domain(format!("mgf needs finite s >= 0, got {s}")));
    }
    if !(gamma_bar > 0.0) {
        return Err(Error::Domain(format!("average SNR must be positive, got {gamma_bar}")));
    }
    Ok(mgf_unchecked(s, ms, gamma_bar))
}

pub(crate) fn mgf_unchecked(s: f64, ms: &MomentSummary, gamma_bar: f64) -> f64 {
    let delta = ms.delta();
    let sd = s * gamma_bar * delta;
    let u = (sd - ms.m / delta) / SQRT_2;
    if u >= 0.0 {
        // exponent + ln erfc(u) = -m²/2δ² + ln erfcx(u)
        let r = ms.m / delta;
        0.5 * (-0.5 * r * r).exp() * erfcx(u)
    } else {
        0.5 * (s * gamma_bar * (0.5 * s * gamma_bar * ms.delta_sq - ms.m)).exp() * erfc(u)
    }
}

/// `P(γ ≤ γ_th)` under the Gaussian model, clamped to `[0, 1]`.
pub fn outage_probability(gamma_th: f64, ms: &MomentSummary, gamma_bar: f64) -> Clamped {
    let delta = ms.delta();
    let lo = -ms.m / (SQRT_2 * delta);
    if gamma_th <= 0.0 {
        return Clamped {
            value: 0.0,
            clamped: gamma_th < 0.0,
        };
    }
    let hi = (gamma_th - ms.m * gamma_bar) / (SQRT_2 * gamma_bar * delta);
    Clamped::new(0.5 * erf_diff(lo, hi), 0.0, 1.0)
}

/// Average bit error rate with the two-exponential approximation
/// `Q(x) ≈ e^{-x²/2}/12 + e^{-2x²/3}/4`, i.e. `M(ψ)/12 + M(4ψ/3)/4`; clamped to
/// `[0, ½]`.
pub fn average_ber(psi: f64, ms: &MomentSummary, gamma_bar: f64) -> Result<Clamped> {
    if !(psi > 0.0) || psi.is_infinite() {
        return Err(Error::Domain(format!(
            "modulation coefficient must be positive, got {psi}"
        )));
    }
    let raw = mgf(psi, ms, gamma_bar)? / 12.0 + mgf(4.0 * psi / 3.0, ms, gamma_bar)? / 4.0;
    Ok(Clamped::new(raw, 0.0, 0.5))
}

/// Ergodic capacity through the exponential fit of `log₂(1+x)`.
pub fn channel_capacity(ms: &MomentSummary, gamma_bar: f64) -> Result<CapacityEstimate> {
    let mut raw = 0.0;
    for (eta, zeta) in CAPACITY_FIT.eta.iter().zip(&CAPACITY_FIT.zeta) {
        raw += eta * mgf(*zeta, ms, gamma_bar)?;
    }
    let bits = raw.max(0.0);
    Ok(CapacityEstimate {
        bits,
        outside_fit_window: gamma_bar * ms.m > CAPACITY_FIT_LIMIT,
        clamped: bits != raw,
    })
}
