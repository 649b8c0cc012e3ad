use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Atmospheric inputs that generated a pair of Gamma-Gamma shapes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtmosphericProvenance {
    /// Refractive-index structure constant, m^(-2/3).
    pub cn2: f64,
    /// Optical wavelength, m.
    pub wavelength: f64,
    /// Total path length, m.
    pub path_length: f64,
    /// Receiver aperture radius, m.
    pub aperture_radius: f64,
    pub rytov_variance: f64,
    pub kappa2: f64,
}

/// Shape parameters of Gamma-Gamma turbulence: large- and small-scale eddy
/// counts `α` and `β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurbulenceParams {
    pub alpha: f64,
    pub beta: f64,
    pub provenance: Option<AtmosphericProvenance>,
}

impl TurbulenceParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite() && beta > 0.0 && beta.is_finite()) {
            return Err(Error::Domain(format!(
                "turbulence shapes must be positive and finite, got alpha={alpha}, beta={beta}"
            )));
        }
        Ok(Self {
            alpha,
            beta,
            provenance: None,
        })
    }

    /// Plane-wave shapes from the Rytov variance and the aperture-averaging
    /// factor `κ² = k D² / 4L`, with `D = 2a`.
    pub fn derive(cn2: f64, wavelength: f64, path_length: f64, aperture_radius: f64) -> Result<Self> {
        for (name, v) in [
            ("cn2", cn2),
            ("wavelength", wavelength),
            ("path_length", path_length),
            ("aperture_radius", aperture_radius),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Domain(format!("{name} must be positive, got {v}")));
            }
        }
        let k = 2.0 * PI / wavelength;
        let diameter = 2.0 * aperture_radius;
        let rytov_variance = 0.5 * cn2 * k.powf(7.0 / 6.0) * path_length.powf(11.0 / 6.0);
        let kappa2 = k * diameter * diameter / (4.0 * path_length);
        let s125 = rytov_variance.powf(1.2);

        let alpha_arg = 0.49 * rytov_variance / (1.0 + 0.18 * kappa2 + 0.56 * s125).powf(7.0 / 6.0);
        let beta_arg = 0.51 * rytov_variance * (1.0 + 0.69 * s125).powf(-5.0 / 6.0)
            / (1.0 + 0.9 * kappa2 + 0.62 * kappa2 * s125).powf(5.0 / 6.0);
        let alpha = 1.0 / alpha_arg.exp_m1();
        let beta = 1.0 / beta_arg.exp_m1();
        if !(alpha.is_finite() && beta.is_finite()) {
            return Err(Error::Domain(format!(
                "turbulence too weak to represent (rytov variance {rytov_variance:e})"
            )));
        }
        Ok(Self {
            alpha,
            beta,
            provenance: Some(AtmosphericProvenance {
                cn2,
                wavelength,
                path_length,
                aperture_radius,
                rytov_variance,
                kappa2,
            }),
        })
    }

    /// `E[h_a²] = (1 + 1/α)(1 + 1/β)`.
    pub fn second_moment(&self) -> f64 {
        (1.0 + 1.0 / self.alpha) * (1.0 + 1.0 / self.beta)
    }

    /// `E[h_a⁴] = Π_{j=1..3} (1 + j/α)(1 + j/β)`.
    pub fn fourth_moment(&self) -> f64 {
        (1..=3)
            .map(|j| (1.0 + j as f64 / self.alpha) * (1.0 + j as f64 / self.beta))
            .product()
    }
}
