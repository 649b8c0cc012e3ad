//! Channel model: atmospheric and geometric parameter derivation, gain
//! densities and reproducible samplers.

mod density;
mod link;
mod pointing;
mod sampling;
mod turbulence;

pub use density::{cdf_h_a, pdf_b, pdf_b_with_contour, pdf_gamma_clt, pdf_h_a};
pub use link::{LinkConfig, Modulation};
pub use pointing::{beam_width_from_divergence, PointingGeometry};
pub use sampling::{sample_aggregate, sample_h_a, sample_h_p, ChannelSampler, RandomStream, StreamFamily};
pub use turbulence::{AtmosphericProvenance, TurbulenceParams};

/// Turbulence shapes used when nothing else is configured.
pub const DEFAULT_ALPHA: f64 = 15.0;
pub const DEFAULT_BETA: f64 = 10.0;

/// Reference pointing geometry: 1 mrad source jitter, 0.5 mrad surface
/// jitter, two 150 m hops, 120 cm beam and 10 cm aperture radius.
pub fn default_pointing() -> PointingGeometry {
    PointingGeometry::derive(1e-3, 0.5e-3, 150.0, 150.0, 1.2, 0.1).expect("reference geometry is valid")
}

pub fn default_turbulence() -> TurbulenceParams {
    TurbulenceParams::new(DEFAULT_ALPHA, DEFAULT_BETA).expect("reference shapes are valid")
}
