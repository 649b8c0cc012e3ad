//! Closed-form performance metrics under the Gaussian approximation of the
//! aggregate SNR, high-SNR asymptotics, and quadrature oracles.
//!
//! With `γ = γ̄Z` and `Z ~ N(m, δ²)` truncated to `[0, ∞)`, every metric reduces
//! to the moment generating function `M(s) = E[e^{-sγ}]` or to a Gaussian
//! integral:
//!
//! * outage `P(γ ≤ γ_th)`,
//! * bit error rate `M(ψ)/12 + M(4ψ/3)/4`,
//! * capacity `Σ ηᵢ M(ζᵢ)`,
//! * moments `E[γⁿ]` through the parabolic cylinder function.

mod asymptotic;
mod metrics;
mod moments;
mod oracle;

pub use asymptotic::{asymptotic_outage, asymptotic_profile, ln_asymptotic_outage, AsymptoticProfile, POLE_SEPARATION};
pub use metrics::{
    average_ber, channel_capacity, mgf, outage_probability, CapacityEstimate, CapacityFit, Clamped, CAPACITY_FIT,
    CAPACITY_FIT_LIMIT,
};
pub use moments::{amount_of_fading, generalized_moment, MomentSummary, MAX_MOMENT_ORDER};
pub use oracle::{oracle_metric, oracle_metric_with, OracleKind, ORACLE_QUADRATURE};
