use std::f64::consts::{FRAC_2_SQRT_PI, SQRT_2};

use crate::error::{Error, Result};

const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;
const SERIES_LIMIT: f64 = 2.0;

/// erf by the positive-term series `2/√π e^{-x²} Σ 2ⁿ x^{2n+1} / (2n+1)!!`.
fn erf_series(x: f64) -> f64 {
    if x == 0.0 {
        return x;
    }
    let ax = x.abs();
    let x2 = ax * ax;
    let mut term = ax;
    let mut sum = ax;
    let mut n = 0.0;
    loop {
        n += 1.0;
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    (FRAC_2_SQRT_PI * (-x2).exp() * sum).copysign(x)
}

/// `√π e^{x²} erfc(x)` for `x >= 2` from the Laplace continued fraction,
/// evaluated with the modified Lentz method.
fn erfc_continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = x;
    let mut c = x;
    let mut d = 0.0;
    for k in 1..2000 {
        let a = 0.5 * k as f64;
        d = x + a * d;
        if d.abs() < TINY {
            d = TINY;
        }
        d = 1.0 / d;
        c = x + a / c;
        if c.abs() < TINY {
            c = TINY;
        }
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    1.0 / f
}

/// Error function.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    if ax < SERIES_LIMIT {
        erf_series(x)
    } else {
        let tail = FRAC_1_SQRT_PI * (-ax * ax).exp() * erfc_continued_fraction(ax);
        (1.0 - tail).copysign(x)
    }
}

/// Complementary error function, accurate in relative terms for large `x`.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x >= SERIES_LIMIT {
        if x > 27.3 {
            return 0.0;
        }
        FRAC_1_SQRT_PI * (-x * x).exp() * erfc_continued_fraction(x)
    } else if x >= 0.0 {
        1.0 - erf_series(x)
    } else {
        1.0 + erf(-x)
    }
}

/// Scaled complementary error function `e^{x²} erfc(x)`.
pub fn erfcx(x: f64) -> f64 {
    if x >= SERIES_LIMIT {
        FRAC_1_SQRT_PI * erfc_continued_fraction(x)
    } else {
        (x * x).exp() * erfc(x)
    }
}

/// `erf(hi) - erf(lo)` without cancellation when both arguments sit in the
/// same tail.
pub fn erf_diff(lo: f64, hi: f64) -> f64 {
    if lo >= 0.0 && hi >= 0.0 {
        erfc(lo) - erfc(hi)
    } else if lo <= 0.0 && hi <= 0.0 {
        erfc(-hi) - erfc(-lo)
    } else {
        erf(hi) - erf(lo)
    }
}

/// Gaussian tail probability `Q(x) = ½ erfc(x/√2)`.
pub fn q_function(x: f64) -> f64 {
    0.5 * erfc(x / SQRT_2)
}

/// Standard normal CDF.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / SQRT_2)
}

/// Standard normal quantile, solved by safeguarded Newton iteration on the
/// tail probability.
pub fn normal_quantile(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!("normal_quantile requires p in (0, 1), got {p}")));
    }
    if p == 0.5 {
        return Ok(0.0);
    }
    // Work in the lower tail: find x < 0 with Φ(x) = q.
    let q = p.min(1.0 - p);
    let mut lo = -40.0f64;
    let mut hi = 0.0f64;
    let t = (-2.0 * q.ln()).sqrt();
    let mut x = -(t
        - (2.515_517 + 0.802_853 * t + 0.010_328 * t * t)
            / (1.0 + 1.432_788 * t + 0.189_269 * t * t + 0.001_308 * t * t * t));
    for _ in 0..100 {
        let f = normal_cdf(x) - q;
        if f > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let density = (-0.5 * x * x).exp() * 0.398_942_280_401_432_7;
        let mut next = x - f / density;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 1e-15 * x.abs().max(1.0) {
            x = next;
            break;
        }
        x = next;
    }
    Ok(if p < 0.5 { x } else { -x })
}

/// Inverse error function on `(-1, 1)`.
pub fn erf_inv(y: f64) -> Result<f64> {
    if !(y > -1.0 && y < 1.0) {
        return Err(Error::Domain(format!("erf_inv requires y in (-1, 1), got {y}")));
    }
    Ok(normal_quantile(0.5 * (1.0 + y))? / SQRT_2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erf_is_odd_and_bounded() {
        assert_eq!(erf(0.0), 0.0);
        for i in 1..200 {
            let x = i as f64 * 0.037;
            assert_eq!(erf(-x), -erf(x));
            assert!(erf(x).abs() <= 1.0);
        }
        assert_eq!(erf(40.0), 1.0);
    }

    #[test]
    fn erf_plus_erfc_is_one() {
        for i in -300..300 {
            let x = i as f64 * 0.0211;
            assert!((erf(x) + erfc(x) - 1.0).abs() <= 1e-14, "x={x}");
        }
    }

    #[test]
    fn erf_continuous_across_branch() {
        let below = erf(SERIES_LIMIT - 1e-15);
        let above = erf(SERIES_LIMIT + 1e-15);
        assert!((below - above).abs() < 1e-14);
        let below = erfc(SERIES_LIMIT - 1e-15);
        let above = erfc(SERIES_LIMIT + 1e-15);
        assert!((below / above - 1.0).abs() < 1e-13);
    }

    #[test]
    fn erfcx_large_argument_asymptote() {
        // erfcx(x) ~ 1/(x√π) (1 - 1/(2x²))
        let x = 1e4;
        let asym = FRAC_1_SQRT_PI / x * (1.0 - 0.5 / (x * x));
        assert!((erfcx(x) / asym - 1.0).abs() < 1e-12);
    }

    #[test]
    fn erf_diff_handles_deep_tails() {
        // erfc(10) - erfc(10.5) in relative terms
        let d = erf_diff(-10.5, -10.0);
        let expected = erfc(10.0) - erfc(10.5);
        assert!(d > 0.0);
        assert!((d / expected - 1.0).abs() < 1e-14);
        assert_eq!(erf_diff(1.0, 1.0), 0.0);
        assert_eq!(erf_diff(-3.0, -3.0), 0.0);
    }

    #[test]
    fn normal_quantile_inverts_cdf() {
        for &p in &[1e-12, 1e-6, 0.01, 0.2, 0.5, 0.7, 0.975, 0.999_999] {
            let x = normal_quantile(p).unwrap();
            let back = normal_cdf(x);
            assert!((back / p - 1.0).abs() < 1e-12, "p={p}");
        }
        assert!(normal_quantile(0.0).is_err());
        assert!(normal_quantile(1.0).is_err());
    }

    #[test]
    fn erf_inv_round_trip() {
        for &y in &[-0.99, -0.3, 0.0, 0.1, 0.95, 0.999_9] {
            let x = erf_inv(y).unwrap();
            assert!((erf(x) - y).abs() < 1e-14);
        }
    }
}
