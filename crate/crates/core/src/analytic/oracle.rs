//! Direct quadrature of each metric against the Gaussian SNR density, as an
//! independent check on the closed forms.

use std::f64::consts::LN_2;

use super::metrics::CAPACITY_FIT;
use super::MomentSummary;
use crate::channel::pdf_gamma_clt;
use crate::error::{Error, Result};
use crate::numerics::{q_function, Integral, Quadrature};

/// Quantity integrated against the SNR density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OracleKind {
    /// `∫₀^{γ_th} f`.
    Outage { gamma_th: f64 },
    /// `∫ Q(√(2ψx)) f` with the exact Gaussian tail.
    BerExactQ { psi: f64 },
    /// `∫ (e^{-ψx}/12 + e^{-4ψx/3}/4) f`.
    BerChiani { psi: f64 },
    /// `∫ log₂(1+x) f`.
    Capacity,
    /// `∫ Σ ηᵢ e^{-ζᵢx} f`.
    CapacityFit,
    /// `∫ xⁿ f`.
    Moment(u32),
    /// `∫ e^{-sx} f`.
    Mgf(f64),
}

pub const ORACLE_QUADRATURE: Quadrature = Quadrature {
    abs_tol: f64::MIN_POSITIVE,
    rel_tol: 1e-10,
    max_subdivisions: 4000,
};

/// Numeric value of `kind` over the density of `γ` restricted to `[0, ∞)`.
pub fn oracle_metric(kind: OracleKind, ms: &MomentSummary, gamma_bar: f64) -> Result<Integral> {
    oracle_metric_with(kind, ms, gamma_bar, &ORACLE_QUADRATURE)
}

pub fn oracle_metric_with(
    kind: OracleKind,
    ms: &MomentSummary,
    gamma_bar: f64,
    quadrature: &Quadrature,
) -> Result<Integral> {
    if !(gamma_bar > 0.0) {
        return Err(Error::Domain(format!("average SNR must be positive, got {gamma_bar}")));
    }
    let mean = gamma_bar * ms.m;
    let sd = gamma_bar * ms.delta();
    let upper = mean + 40.0 * sd;
    let breaks: Vec<f64> = (-20..=20)
        .map(|k| mean + 2.0 * k as f64 * sd)
        .filter(|&x| x > 0.0)
        .collect();
    let pdf = move |x: f64| pdf_gamma_clt(x, ms.m, ms.delta_sq, gamma_bar);
    let run = |f: &dyn Fn(f64) -> f64, hi: f64| quadrature.integrate_with_breaks(f, 0.0, hi, &breaks);

    match kind {
        OracleKind::Outage { gamma_th } => {
            if !(gamma_th >= 0.0) {
                return Err(Error::Domain(format!("threshold must be non-negative, got {gamma_th}")));
            }
            run(&pdf, gamma_th.min(upper))
        }
        OracleKind::BerExactQ { psi } => {
            check_psi(psi)?;
            run(&|x: f64| q_function((2.0 * psi * x).sqrt()) * pdf(x), upper)
        }
        OracleKind::BerChiani { psi } => {
            check_psi(psi)?;
            run(
                &|x: f64| ((-psi * x).exp() / 12.0 + (-4.0 * psi * x / 3.0).exp() / 4.0) * pdf(x),
                upper,
            )
        }
        OracleKind::Capacity => run(&|x: f64| x.ln_1p() / LN_2 * pdf(x), upper),
        OracleKind::CapacityFit => run(&|x: f64| CAPACITY_FIT.approx_log2_1p(x) * pdf(x), upper),
        OracleKind::Moment(n) => run(&|x: f64| x.powi(n as i32) * pdf(x), upper),
        OracleKind::Mgf(s) => {
            if !(s >= 0.0) {
                return Err(Error::Domain(format!("mgf needs s >= 0, got {s}")));
            }
            run(&|x: f64| (-s * x).exp() * pdf(x), upper)
        }
    }
}

fn check_psi(psi: f64) -> Result<()> {
    if psi > 0.0 && psi.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "modulation coefficient must be positive, got {psi}"
        )))
    }
}
