use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

// 21-point Kronrod extension of the 10-point Gauss rule on [-1, 1];
// abscissae in decreasing order, the last one is the centre.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
// Gauss weights for the odd-indexed Kronrod abscissae.
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_191,
];

/// Adaptive quadrature budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for Quadrature {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_subdivisions: 2000,
        }
    }
}

/// Result of a quadrature: value and estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub err_estimate: f64,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod_21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Segment> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_centre = f(centre);
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    let mut kronrod = WGK[10] * f_centre;
    let mut gauss = 0.0;
    let mut abs_sum = WGK[10] * f_centre.abs();
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx);
        let f2 = f(centre + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    if !kronrod.is_finite() || !f_centre.is_finite() {
        return Err(Error::Domain(format!("integrand is not finite on [{a}, {b}]")));
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[10] * (f_centre - mean).abs();
    for j in 0..10 {
        asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let h = half.abs();
    let value = kronrod * half;
    let abs_sum = abs_sum * h;
    let asc = asc * h;
    let mut error = ((kronrod - gauss) * half).abs();
    if asc != 0.0 && error != 0.0 {
        error = asc * (200.0 * error / asc).powf(1.5).min(1.0);
    }
    if abs_sum > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * abs_sum);
    }
    Ok(Segment { a, b, value, error })
}

impl Quadrature {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        let q = Self {
            abs_tol,
            rel_tol,
            max_subdivisions,
        };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::Domain("quadrature tolerances must be strictly positive".into()));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::Domain("max_subdivisions must be at least 1".into()));
        }
        Ok(())
    }

    /// Integrates `f` over the finite interval `[a, b]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> Result<Integral> {
        self.integrate_with_breaks(f, a, b, &[])
    }

    /// Integrates over `[a, b]` (`b` may be `+∞`), seeding the adaptive
    /// subdivision with the supplied interior break points.
    pub fn integrate_with_breaks<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64, breaks: &[f64]) -> Result<Integral> {
        self.validate()?;
        if a.is_nan() || b.is_nan() || a.is_infinite() {
            return Err(Error::Domain(format!("invalid integration limits [{a}, {b}]")));
        }
        if a == b {
            return Ok(Integral {
                value: 0.0,
                err_estimate: 0.0,
            });
        }
        if b < a {
            let r = self.integrate_with_breaks(f, b, a, breaks)?;
            return Ok(Integral {
                value: -r.value,
                err_estimate: r.err_estimate,
            });
        }
        if b == f64::INFINITY {
            // x = a + (1 - t)/t maps t ∈ (0, 1] onto [a, ∞).
            let g = |t: f64| {
                let x = a + (1.0 - t) / t;
                f(x) / (t * t)
            };
            let mut points: Vec<f64> = breaks
                .iter()
                .filter(|&&x| x > a && x.is_finite())
                .map(|&x| 1.0 / (1.0 + x - a))
                .collect();
            points.sort_by(f64::total_cmp);
            return self.adaptive(&g, 0.0, 1.0, &points);
        }
        let mut points: Vec<f64> = breaks.iter().copied().filter(|&x| x > a && x < b).collect();
        points.sort_by(f64::total_cmp);
        self.adaptive(&f, a, b, &points)
    }

    fn adaptive<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64, breaks: &[f64]) -> Result<Integral> {
        let mut heap = BinaryHeap::new();
        let mut edges = Vec::with_capacity(breaks.len() + 2);
        edges.push(a);
        for &x in breaks {
            if x > *edges.last().unwrap() {
                edges.push(x);
            }
        }
        if b > *edges.last().unwrap() {
            edges.push(b);
        }
        for w in edges.windows(2) {
            heap.push(gauss_kronrod_21(f, w[0], w[1])?);
        }
        let budget = self.max_subdivisions.max(heap.len());
        loop {
            let (value, error) = heap.iter().fold((0.0, 0.0), |(v, e), s| (v + s.value, e + s.error));
            if error <= self.abs_tol.max(self.rel_tol * value.abs()) {
                return Ok(Integral {
                    value,
                    err_estimate: error,
                });
            }
            if heap.len() >= budget {
                return Err(Error::Accuracy {
                    value,
                    err_estimate: error,
                });
            }
            let worst = heap.pop().expect("non-empty segment heap");
            let mid = 0.5 * (worst.a + worst.b);
            if !(mid > worst.a && mid < worst.b)
                || (worst.b - worst.a) < 1e3 * f64::EPSILON * mid.abs().max(f64::MIN_POSITIVE)
            {
                heap.push(worst);
                return Err(Error::Accuracy {
                    value,
                    err_estimate: error,
                });
            }
            heap.push(gauss_kronrod_21(f, worst.a, mid)?);
            heap.push(gauss_kronrod_21(f, mid, worst.b)?);
        }
    }
}

/// Integrates `f` over `[0, ∞)`.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: F, q: &Quadrature) -> Result<Integral> {
    q.integrate_with_breaks(f, 0.0, f64::INFINITY, &[])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronrod_rule_is_exact_for_degree_31() {
        let q = Quadrature::default();
        for d in 0..=31 {
            let seg = gauss_kronrod_21(&|x: f64| x.powi(d), -1.0, 1.0).unwrap();
            let exact = if d % 2 == 0 { 2.0 / (d as f64 + 1.0) } else { 0.0 };
            assert!((seg.value - exact).abs() < 1e-14, "degree {d}");
        }
        let r = q.integrate(|x| x * x, 0.0, 3.0).unwrap();
        assert!((r.value - 9.0).abs() < 1e-13);
    }

    #[test]
    fn rejects_bad_budget() {
        assert!(Quadrature::new(0.0, 1e-8, 10).is_err());
        assert!(Quadrature::new(1e-8, -1.0, 10).is_err());
        assert!(Quadrature::new(1e-8, 1e-8, 0).is_err());
    }

    #[test]
    fn reversed_limits_flip_sign() {
        let q = Quadrature::default();
        let fwd = q.integrate(f64::sin, 0.0, 2.0).unwrap().value;
        let rev = q.integrate(f64::sin, 2.0, 0.0).unwrap().value;
        assert_eq!(fwd, -rev);
    }

    #[test]
    fn exhausted_budget_reports_partial_result() {
        let q = Quadrature::new(1e-14, 1e-14, 3).unwrap();
        match q.integrate(|x: f64| (50.0 * x).sin() / x.sqrt(), 1e-9, 10.0) {
            Err(Error::Accuracy { value, err_estimate }) => {
                assert!(value.is_finite());
                assert!(err_estimate > 0.0);
            }
            other => panic!("expected accuracy error, got {other:?}"),
        }
    }

    #[test]
    fn algebraic_endpoint_singularity() {
        let q = Quadrature::default();
        let r = q.integrate(|x: f64| x.powf(-0.75), 0.0, 1.0).unwrap();
        assert!((r.value - 4.0).abs() < 1e-8);
    }

    #[test]
    fn breaks_find_a_narrow_peak() {
        let q = Quadrature::default();
        let peak = |x: f64| (-(x - 1e4).powi(2) / 2.0).exp();
        let r = q
            .integrate_with_breaks(peak, 0.0, f64::INFINITY, &[1e4 - 10.0, 1e4, 1e4 + 10.0])
            .unwrap();
        assert!((r.value - (2.0 * std::f64::consts::PI).sqrt()).abs() < 1e-9);
    }
}
