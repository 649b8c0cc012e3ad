//! Meijer `G^{3,0}_{1,3}(x | a; b₁, b₂, b₃)` on the positive real axis by
//! direct quadrature of its Mellin–Barnes integral
//!
//! ```text
//! G(x) = 1/(2πi) ∫_{σ-i∞}^{σ+i∞} Γ(b₁+s) Γ(b₂+s) Γ(b₃+s) / Γ(a+s) · x^{-s} ds
//! ```
//!
//! along the vertical line `Re s = σ`. The integrand is conjugate-symmetric,
//! so `G(x) = (1/π) ∫₀^∞ Re F(σ + it) dt`. The shift `σ` defaults to the real
//! saddle point of `|F|`, which keeps the oscillatory cancellation small, and
//! is never closer than [`MIN_POLE_DISTANCE`] to the rightmost pole `-min bⱼ`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::gamma::ln_gamma_complex;

pub const MIN_POLE_DISTANCE: f64 = 0.25;
pub const MIN_NODE_COUNT: usize = 64;
const PANEL_NODES: usize = 16;
/// Times the node count may be doubled before giving up.
const MAX_REFINEMENTS: u32 = 3;
/// Decay of `|F|`, in nats below its value at `t = 0`, at which the contour
/// is truncated.
const TRUNCATION_NATS: f64 = 42.0;

const GL16_X: [f64; 8] = [
    0.095_012_509_837_637_45,
    0.281_603_550_779_258_9,
    0.458_016_777_657_227_37,
    0.617_876_244_402_643_8,
    0.755_404_408_355_003,
    0.865_631_202_387_831_8,
    0.944_575_023_073_232_6,
    0.989_400_934_991_649_9,
];
const GL16_W: [f64; 8] = [
    0.189_450_610_455_068_59,
    0.182_603_415_044_923_6,
    0.169_156_519_395_002_62,
    0.149_595_988_816_576_76,
    0.124_628_971_255_534_03,
    0.095_158_511_682_492_59,
    0.062_253_523_938_647_706,
    0.027_152_459_411_754_037,
];

/// Integration contour for the Mellin–Barnes representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MellinBarnesContour {
    /// Real part of the contour; `None` selects the saddle point.
    pub real_shift: Option<f64>,
    /// Truncation height of the contour; `None` selects it from the decay of
    /// the integrand.
    pub half_height: Option<f64>,
    /// Starting number of quadrature nodes on `[0, half_height]`; doubled up
    /// to three times until the full and half node sets agree.
    pub node_count: usize,
    /// Relative agreement required between the full and half node sets.
    pub rel_tol: f64,
}

impl Default for MellinBarnesContour {
    fn default() -> Self {
        Self {
            real_shift: None,
            half_height: None,
            node_count: 256,
            rel_tol: 1e-6,
        }
    }
}

impl MellinBarnesContour {
    pub fn with_node_count(node_count: usize) -> Self {
        Self {
            node_count,
            ..Self::default()
        }
    }

    pub fn with_real_shift(real_shift: f64) -> Self {
        Self {
            real_shift: Some(real_shift),
            ..Self::default()
        }
    }
}

struct Integrand {
    a: f64,
    b: [f64; 3],
    ln_x: f64,
}

impl Integrand {
    fn ln_value(&self, s: Complex64) -> Complex64 {
        self.b.iter().map(|&bj| ln_gamma_complex(s + bj)).sum::<Complex64>()
            - ln_gamma_complex(s + self.a)
            - s * self.ln_x
    }

    fn ln_modulus_on_axis(&self, sigma: f64) -> f64 {
        self.ln_value(Complex64::new(sigma, 0.0)).re
    }

    /// Minimiser of the (convex) log-modulus on the real axis, restricted to
    /// `sigma >= lower`.
    fn saddle(&self, lower: f64) -> f64 {
        let phi = |s: f64| self.ln_modulus_on_axis(s);
        let mut step = 1.0;
        let mut hi = lower + step;
        while phi(hi) < phi(hi - 0.5 * step) && hi < 1e8 {
            step *= 2.0;
            hi = lower + step;
        }
        let (mut lo, mut hi) = (lower, hi);
        let ratio = 0.5 * (5f64.sqrt() - 1.0);
        let mut c = hi - ratio * (hi - lo);
        let mut d = lo + ratio * (hi - lo);
        let (mut fc, mut fd) = (phi(c), phi(d));
        for _ in 0..120 {
            if (hi - lo) < 1e-9 * (1.0 + lo.abs()) {
                break;
            }
            if fc < fd {
                hi = d;
                d = c;
                fd = fc;
                c = hi - ratio * (hi - lo);
                fc = phi(c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + ratio * (hi - lo);
                fd = phi(d);
            }
        }
        0.5 * (lo + hi)
    }

    fn truncation_height(&self, sigma: f64) -> f64 {
        let reference = self.ln_modulus_on_axis(sigma);
        let mut t = 1.0;
        while t < 1e6 {
            let level = self.ln_value(Complex64::new(sigma, t)).re;
            if level < reference - TRUNCATION_NATS {
                return t;
            }
            t *= 1.5;
        }
        t
    }

    /// `∫₀^T Re exp(ln F(σ+it) - shift) dt` on `panels` Gauss–Legendre panels.
    fn contour_sum(&self, sigma: f64, height: f64, panels: usize, shift: f64) -> f64 {
        let width = height / panels as f64;
        let mut total = 0.0;
        for p in 0..panels {
            let centre = (p as f64 + 0.5) * width;
            let half = 0.5 * width;
            let mut panel = 0.0;
            for (x, w) in GL16_X.iter().zip(GL16_W.iter()) {
                for t in [centre - half * x, centre + half * x] {
                    let z = self.ln_value(Complex64::new(sigma, t)) - shift;
                    panel += w * z.exp().re;
                }
            }
            total += panel * half;
        }
        total
    }
}

/// `G^{3,0}_{1,3}(x | a1; b)` for `x > 0`.
pub fn meijer_g_1330(a1: f64, b: [f64; 3], x: f64, contour: &MellinBarnesContour) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("meijer_g_1330 requires x > 0, got {x}")));
    }
    if !a1.is_finite() || b.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("meijer_g_1330 parameters must be finite".into()));
    }
    if contour.node_count < MIN_NODE_COUNT {
        return Err(Error::Domain(format!(
            "contour needs at least {MIN_NODE_COUNT} nodes, got {}",
            contour.node_count
        )));
    }
    let rightmost_pole = -b.iter().copied().fold(f64::INFINITY, f64::min);
    let integrand = Integrand { a: a1, b, ln_x: x.ln() };

    let sigma = match contour.real_shift {
        Some(s) => {
            if !(s > rightmost_pole) || (s - rightmost_pole) < 1e-6 {
                return Err(Error::DegenerateParameters(format!(
                    "contour Re s = {s} is not right of the pole at {rightmost_pole}"
                )));
            }
            s
        }
        None => integrand.saddle(rightmost_pole + MIN_POLE_DISTANCE),
    };
    let height = match contour.half_height {
        Some(h) if h > 0.0 => h,
        Some(h) => return Err(Error::Domain(format!("half_height must be positive, got {h}"))),
        None => integrand.truncation_height(sigma),
    };

    let shift = integrand.ln_modulus_on_axis(sigma);
    let scale = shift.exp() / std::f64::consts::PI;
    let mut panels = contour.node_count.div_ceil(PANEL_NODES).max(2);
    let mut coarse = integrand.contour_sum(sigma, height, panels / 2, shift);
    let mut refinements = 0;
    loop {
        let fine = integrand.contour_sum(sigma, height, panels, shift);
        let value = fine * scale;
        let err_estimate = ((fine - coarse) * scale).abs();
        if value.is_finite() && err_estimate <= contour.rel_tol * value.abs() {
            return Ok(value);
        }
        if !value.is_finite() || refinements == MAX_REFINEMENTS {
            return Err(Error::Accuracy { value, err_estimate });
        }
        coarse = fine;
        panels *= 2;
        refinements += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Closed form for a reducible case: with `a = b₃` the Gamma ratio
    /// collapses to `G^{2,0}_{0,2}(x | b₁, b₂) = 2 x^{(b₁+b₂)/2} K_{b₁-b₂}(2√x)`.
    #[test]
    fn reduces_to_bessel_when_parameter_cancels() {
        use crate::numerics::bessel::bessel_k;
        let (b1, b2, b3) = (0.7, 2.2, 1.4);
        for &x in &[0.05, 0.8, 3.0, 25.0] {
            let g = meijer_g_1330(b3, [b1, b2, b3], x, &MellinBarnesContour::default()).unwrap();
            let expected = 2.0 * x.powf(0.5 * (b1 + b2)) * bessel_k(b1 - b2, 2.0 * x.sqrt()).unwrap();
            assert!((g / expected - 1.0).abs() < 1e-8, "x={x}: {g} vs {expected}");
        }
    }

    #[test]
    fn explicit_shift_left_of_pole_is_degenerate() {
        let contour = MellinBarnesContour::with_real_shift(-3.0);
        let r = meijer_g_1330(3.2, [2.2, 14.0, 9.0], 5.0, &contour);
        assert!(matches!(r, Err(Error::DegenerateParameters(_))));
    }

    #[test]
    fn too_few_nodes_rejected() {
        let contour = MellinBarnesContour::with_node_count(32);
        assert!(meijer_g_1330(3.2, [2.2, 14.0, 9.0], 5.0, &contour).is_err());
    }
}
