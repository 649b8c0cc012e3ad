use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

use super::{LinkConfig, PointingGeometry, TurbulenceParams};
use crate::error::{Error, Result};

/// A reproducible random sequence identified by `(seed, stream_id)`.
///
/// Each id selects an independent ChaCha8 stream under the same key, so the
/// sequence of stream `j` does not depend on which worker draws it or on what
/// other streams were used before.
#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    stream_id: u64,
    rng: ChaCha8Rng,
}

impl RandomStream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream_id);
        rng.set_word_pos(0);
        Self { seed, stream_id, rng }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }
}

/// All streams under one seed; [`StreamFamily::stream`] equals
/// [`RandomStream::new`] without re-running the key schedule.
#[derive(Debug, Clone)]
pub struct StreamFamily {
    seed: u64,
    base: ChaCha8Rng,
}

impl StreamFamily {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            base: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn stream(&self, stream_id: u64) -> RandomStream {
        let mut rng = self.base.clone();
        rng.set_stream(stream_id);
        rng.set_word_pos(0);
        RandomStream {
            seed: self.seed,
            stream_id,
            rng,
        }
    }
}

impl RngCore for RandomStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.rng.fill_bytes(dst)
    }
}

/// Pre-built per-element gain sampler.
///
/// Turbulence is drawn as `X·Y` with unit-mean Gamma factors of shapes `α`
/// and `β`. Pointing loss follows the jitter model: source angles
/// `θ ~ N(0, σ_θ²)` and surface angles `β ~ N(0, σ_β²)` per axis combine into
/// `θ' = (1 + L₁/L₂)θ + 2β`, the footprint offset is `r = θ'·L₂` and the gain is
/// `A₀·exp(-2r²/ω_zeq²)`.
#[derive(Debug, Clone)]
pub struct ChannelSampler {
    large_scale: Gamma<f64>,
    small_scale: Gamma<f64>,
    theta_gain: f64,
    sigma_theta: f64,
    sigma_beta: f64,
    l2: f64,
    a0: f64,
    footprint_rate: f64,
}

impl ChannelSampler {
    pub fn new(turbulence: &TurbulenceParams, pointing: &PointingGeometry) -> Result<Self> {
        let gamma = |shape: f64| {
            Gamma::new(shape, 1.0 / shape).map_err(|e| Error::Domain(format!("invalid Gamma shape {shape}: {e}")))
        };
        // An overridden exponent rescales the footprint rate by c/c_geo, which
        // turns the CDF (h/A₀)^{c_geo} into (h/A₀)^c.
        let footprint_rate = if pointing.geometric_c().is_finite() {
            2.0 / pointing.wzeq2() * pointing.geometric_c() / pointing.c()
        } else {
            2.0 / pointing.wzeq2()
        };
        Ok(Self {
            large_scale: gamma(turbulence.alpha)?,
            small_scale: gamma(turbulence.beta)?,
            theta_gain: 1.0 + pointing.l1() / pointing.l2(),
            sigma_theta: pointing.sigma_theta(),
            sigma_beta: pointing.sigma_beta(),
            l2: pointing.l2(),
            a0: pointing.a0(),
            footprint_rate,
        })
    }

    /// Turbulence gain `h_a`, unit mean.
    pub fn h_a<R: RngCore + ?Sized>(&self, rng: &mut R) -> f64 {
        self.large_scale.sample(rng) * self.small_scale.sample(rng)
    }

    /// Pointing gain `h_p ∈ (0, A₀]`.
    pub fn h_p<R: RngCore + ?Sized>(&self, rng: &mut R) -> f64 {
        let mut axis = || {
            let theta: f64 = StandardNormal.sample(rng);
            let beta: f64 = StandardNormal.sample(rng);
            (self.theta_gain * self.sigma_theta * theta + 2.0 * self.sigma_beta * beta) * self.l2
        };
        let rx = axis();
        let ry = axis();
        let r2 = rx * rx + ry * ry;
        (self.a0 * (-self.footprint_rate * r2).exp()).max(f64::MIN_POSITIVE)
    }

    /// Squared composite gain `B = (h_a·h_p)²` of one element.
    pub fn b<R: RngCore + ?Sized>(&self, rng: &mut R) -> f64 {
        let h = self.h_a(rng) * self.h_p(rng);
        h * h
    }

    /// `Z = Σ_{k=1..n} B_k` with the elements drawn consecutively from `rng`.
    pub fn z<R: RngCore + ?Sized>(&self, n_elements: usize, rng: &mut R) -> f64 {
        (0..n_elements).map(|_| self.b(rng)).sum()
    }
}

/// One turbulence gain.
pub fn sample_h_a(turbulence: &TurbulenceParams, rng: &mut RandomStream) -> Result<f64> {
    let x = Gamma::new(turbulence.alpha, 1.0 / turbulence.alpha).map_err(|e| Error::Domain(e.to_string()))?;
    let y = Gamma::new(turbulence.beta, 1.0 / turbulence.beta).map_err(|e| Error::Domain(e.to_string()))?;
    Ok(x.sample(rng) * y.sample(rng))
}

/// One pointing gain.
pub fn sample_h_p(pointing: &PointingGeometry, rng: &mut RandomStream) -> f64 {
    // Turbulence shapes are irrelevant here; any valid pair builds the sampler.
    let unit = TurbulenceParams {
        alpha: 1.0,
        beta: 1.0,
        provenance: None,
    };
    ChannelSampler::new(&unit, pointing)
        .expect("unit shapes are valid")
        .h_p(rng)
}

/// One draw of `(Z, γ = γ̄·Z)` for the configured element count.
pub fn sample_aggregate(
    turbulence: &TurbulenceParams,
    pointing: &PointingGeometry,
    cfg: &LinkConfig,
    rng: &mut RandomStream,
) -> Result<(f64, f64)> {
    cfg.validate()?;
    let z = ChannelSampler::new(turbulence, pointing)?.z(cfg.n_elements, rng);
    Ok((z, cfg.gamma_bar * z))
}
