use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::erf;

/// Jitter statistics and beam geometry of one source → surface → receiver
/// path, together with the derived pointing-loss parameters.
///
/// The pointing gain has the power-law CDF `P(h_p ≤ h) = (h/A₀)^c` on
/// `(0, A₀]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointingGeometry {
    sigma_theta: f64,
    sigma_beta: f64,
    l1: f64,
    l2: f64,
    beam_width: f64,
    aperture_radius: f64,
    nu: f64,
    a0: f64,
    wzeq2: f64,
    geometric_c: f64,
    c: f64,
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be positive and finite, got {v}")))
    }
}

/// Beam width at the receiver from the divergence angle, `ω_z = φ L`.
pub fn beam_width_from_divergence(divergence: f64, path_length: f64) -> f64 {
    divergence * path_length
}

impl PointingGeometry {
    /// Source jitter `sigma_theta` and surface jitter `sigma_beta` in rad;
    /// `l1` (source → surface), `l2` (surface → receiver), beam width `wz` and
    /// aperture radius `a` in m.
    pub fn derive(sigma_theta: f64, sigma_beta: f64, l1: f64, l2: f64, wz: f64, a: f64) -> Result<Self> {
        check_positive("sigma_theta", sigma_theta)?;
        check_positive("sigma_beta", sigma_beta)?;
        check_positive("l1", l1)?;
        check_positive("l2", l2)?;
        Self::build(sigma_theta, sigma_beta, l1, l2, wz, a)
    }

    /// A single unreflected path of length `path_length`: only the source
    /// jitter acts and the whole distance is covered after the jitter.
    pub fn direct_link(sigma_theta: f64, path_length: f64, wz: f64, a: f64) -> Result<Self> {
        check_positive("sigma_theta", sigma_theta)?;
        check_positive("path_length", path_length)?;
        Self::build(sigma_theta, 0.0, 0.0, path_length, wz, a)
    }

    /// Geometry with no jitter at all: the gain is pinned at `A₀` and `c` is
    /// infinite.
    pub fn jitter_free(l1: f64, l2: f64, wz: f64, a: f64) -> Result<Self> {
        check_positive("l2", l2)?;
        if !(l1 >= 0.0 && l1.is_finite()) {
            return Err(Error::Domain(format!("l1 must be non-negative, got {l1}")));
        }
        Self::build(0.0, 0.0, l1, l2, wz, a)
    }

    fn build(sigma_theta: f64, sigma_beta: f64, l1: f64, l2: f64, wz: f64, a: f64) -> Result<Self> {
        check_positive("beam width", wz)?;
        check_positive("aperture radius", a)?;
        let nu = (PI / 2.0).sqrt() * a / wz;
        let erf_nu = erf(nu);
        let a0 = erf_nu * erf_nu;
        let wzeq2 = wz * wz * PI.sqrt() * erf_nu / (2.0 * nu * (-nu * nu).exp());
        let total = l1 + l2;
        let spread = 4.0 * sigma_theta * sigma_theta * total * total + 16.0 * sigma_beta * sigma_beta * l2 * l2;
        let geometric_c = if spread > 0.0 { wzeq2 / spread } else { f64::INFINITY };
        Ok(Self {
            sigma_theta,
            sigma_beta,
            l1,
            l2,
            beam_width: wz,
            aperture_radius: a,
            nu,
            a0,
            wzeq2,
            geometric_c,
            c: geometric_c,
        })
    }

    /// Replaces the jitter exponent `c` while keeping the geometry. Samplers
    /// rescale the beam-footprint exponent so that drawn gains follow
    /// `(h/A₀)^c` with the replaced value.
    pub fn with_c(mut self, c: f64) -> Result<Self> {
        check_positive("c", c)?;
        if !self.geometric_c.is_finite() {
            return Err(Error::Domain("cannot override c of a jitter-free geometry".into()));
        }
        self.c = c;
        Ok(self)
    }

    pub fn sigma_theta(&self) -> f64 {
        self.sigma_theta
    }
    pub fn sigma_beta(&self) -> f64 {
        self.sigma_beta
    }
    pub fn l1(&self) -> f64 {
        self.l1
    }
    pub fn l2(&self) -> f64 {
        self.l2
    }
    pub fn path_length(&self) -> f64 {
        self.l1 + self.l2
    }
    pub fn beam_width(&self) -> f64 {
        self.beam_width
    }
    pub fn aperture_radius(&self) -> f64 {
        self.aperture_radius
    }
    /// Ratio `√(π/2)·a/ω_z`.
    pub fn nu(&self) -> f64 {
        self.nu
    }
    /// Largest attainable pointing gain.
    pub fn a0(&self) -> f64 {
        self.a0
    }
    /// Squared equivalent beam width at the aperture, m².
    pub fn wzeq2(&self) -> f64 {
        self.wzeq2
    }
    /// Power-law exponent of the pointing gain (possibly overridden).
    pub fn c(&self) -> f64 {
        self.c
    }
    /// Exponent implied by the raw jitter and beam geometry.
    pub fn geometric_c(&self) -> f64 {
        self.geometric_c
    }
    pub fn is_c_overridden(&self) -> bool {
        self.c != self.geometric_c
    }

    /// `E[h_p^k] = A₀^k · c/(c + k)`.
    pub fn moment(&self, k: f64) -> f64 {
        self.a0.powf(k) / (1.0 + k / self.c)
    }

    /// `P(h_p ≤ h)`.
    pub fn cdf(&self, h: f64) -> f64 {
        if h <= 0.0 {
            0.0
        } else if h >= self.a0 {
            1.0
        } else {
            (h / self.a0).powf(self.c)
        }
    }

    /// Density `c h^{c-1} / A₀^c` on `(0, A₀]`.
    pub fn pdf(&self, h: f64) -> f64 {
        if h <= 0.0 || h > self.a0 || !self.c.is_finite() {
            return 0.0;
        }
        self.c / self.a0 * (h / self.a0).powf(self.c - 1.0)
    }
}
