use std::f64::consts::LN_2;
use std::fmt;
use std::ops::Range;

use rayon::prelude::*;

use super::ExactSum;
use crate::channel::{ChannelSampler, LinkConfig, PointingGeometry, StreamFamily, TurbulenceParams};
use crate::error::{Error, Result};
use crate::numerics::{normal_quantile, q_function};

/// Smallest sample count accepted by the reporting estimators.
pub const MIN_SAMPLES: u64 = 1000;
/// Streams handled per parallel work item. Fixed so that the work split does
/// not depend on the worker count.
pub const CHUNK_STREAMS: u64 = 2048;

/// Per-sample quantity averaged by the estimator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MetricKind {
    /// Indicator of `γ ≤ γ_th`.
    Outage { gamma_th: f64 },
    /// Exact `Q(√(2ψγ))`.
    Ber { psi: f64 },
    /// `log₂(1+γ)`.
    Capacity,
    /// `γⁿ`.
    Moment(u32),
}

impl MetricKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            MetricKind::Outage { gamma_th } if !(gamma_th >= 0.0 && gamma_th.is_finite()) => Err(Error::Domain(
                format!("outage threshold must be non-negative, got {gamma_th}"),
            )),
            MetricKind::Ber { psi } if !(psi > 0.0 && psi.is_finite()) => Err(Error::Domain(format!(
                "modulation coefficient must be positive, got {psi}"
            ))),
            MetricKind::Moment(n) if n > 16 => Err(Error::Domain(format!(
                "moment order {n} is too large to average reliably"
            ))),
            _ => Ok(()),
        }
    }

    #[inline]
    pub fn evaluate(&self, gamma: f64) -> f64 {
        match *self {
            MetricKind::Outage { gamma_th } => {
                if gamma <= gamma_th {
                    1.0
                } else {
                    0.0
                }
            }
            MetricKind::Ber { psi } => q_function((2.0 * psi * gamma).sqrt()),
            MetricKind::Capacity => gamma.ln_1p() / LN_2,
            MetricKind::Moment(n) => gamma.powi(n as i32),
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricKind::Outage { .. } => write!(f, "outage"),
            MetricKind::Ber { .. } => write!(f, "ber"),
            MetricKind::Capacity => write!(f, "capacity"),
            MetricKind::Moment(n) => write!(f, "moment{n}"),
        }
    }
}

/// 64-bit FNV-1a digest of a parameter set, used to refuse merging estimates
/// of different experiments.
pub fn parameter_fingerprint(
    turbulence: &TurbulenceParams,
    pointing: &PointingGeometry,
    n_elements: usize,
    gamma_bar: f64,
) -> u64 {
    let fields = [
        turbulence.alpha,
        turbulence.beta,
        pointing.sigma_theta(),
        pointing.sigma_beta(),
        pointing.l1(),
        pointing.l2(),
        pointing.beam_width(),
        pointing.aperture_radius(),
        pointing.c(),
        n_elements as f64,
        gamma_bar,
    ];
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for v in fields {
        for byte in v.to_bits().to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

/// Mergeable Monte Carlo accumulator of one metric.
#[derive(Debug, Clone, PartialEq)]
pub struct McEstimate {
    kind: MetricKind,
    fingerprint: u64,
    seed: u64,
    n_samples: u64,
    sum: ExactSum,
    sum_sq: ExactSum,
    /// Sorted, disjoint, inclusive stream-id ranges already accumulated.
    spans: Vec<(u64, u64)>,
}

impl McEstimate {
    pub fn empty(kind: MetricKind, fingerprint: u64, seed: u64) -> Self {
        Self {
            kind,
            fingerprint,
            seed,
            n_samples: 0,
            sum: ExactSum::new(),
            sum_sq: ExactSum::new(),
            spans: Vec::new(),
        }
    }

    fn record(&mut self, value: f64) {
        self.n_samples += 1;
        self.sum.add(value);
        self.sum_sq.add(value * value);
    }

    pub fn kind(&self) -> MetricKind {
        self.kind
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
    pub fn seed(&self) -> u64 {
        self.seed
    }
    pub fn n_samples(&self) -> u64 {
        self.n_samples
    }
    pub fn sum(&self) -> f64 {
        self.sum.value()
    }
    pub fn sum_sq(&self) -> f64 {
        self.sum_sq.value()
    }
    pub fn spans(&self) -> &[(u64, u64)] {
        &self.spans
    }

    /// First and last stream id covered, if any.
    pub fn stream_span(&self) -> Option<(u64, u64)> {
        Some((self.spans.first()?.0, self.spans.last()?.1))
    }

    /// Sample mean; NaN when empty.
    pub fn mean(&self) -> f64 {
        self.sum() / self.n_samples as f64
    }

    /// Standard error of the mean, `√((Σx²/n - x̄²)/n)`.
    pub fn stderr(&self) -> f64 {
        let n = self.n_samples as f64;
        let mean = self.mean();
        ((self.sum_sq() / n - mean * mean).max(0.0) / n).sqrt()
    }

    /// Pools two estimates of the same experiment over disjoint streams.
    pub fn merge(&self, other: &McEstimate) -> Result<McEstimate> {
        if self.kind != other.kind {
            return Err(Error::Merge(format!(
                "metric kinds differ: {:?} vs {:?}",
                self.kind, other.kind
            )));
        }
        if self.fingerprint != other.fingerprint {
            return Err(Error::Merge("parameter fingerprints differ".into()));
        }
        if self.seed != other.seed {
            return Err(Error::Merge(format!("seeds differ: {} vs {}", self.seed, other.seed)));
        }
        let mut spans: Vec<(u64, u64)> = self.spans.iter().chain(&other.spans).copied().collect();
        spans.sort_unstable();
        let mut coalesced: Vec<(u64, u64)> = Vec::with_capacity(spans.len());
        for (lo, hi) in spans {
            match coalesced.last_mut() {
                Some(last) if lo <= last.1 => {
                    return Err(Error::Merge(format!(
                        "stream spans overlap at [{lo}, {}]",
                        hi.min(last.1)
                    )));
                }
                Some(last) if lo == last.1 + 1 => last.1 = hi,
                _ => coalesced.push((lo, hi)),
            }
        }
        let mut sum = self.sum.clone();
        sum.merge(&other.sum);
        let mut sum_sq = self.sum_sq.clone();
        sum_sq.merge(&other.sum_sq);
        Ok(McEstimate {
            kind: self.kind,
            fingerprint: self.fingerprint,
            seed: self.seed,
            n_samples: self.n_samples + other.n_samples,
            sum,
            sum_sq,
            spans: coalesced,
        })
    }

    /// Normal-approximation interval `mean ± z·stderr` at two-sided `level`.
    pub fn confidence_interval(&self, level: f64) -> Result<(f64, f64)> {
        if self.n_samples < 30 {
            return Err(Error::Domain(format!(
                "confidence interval needs at least 30 samples, have {}",
                self.n_samples
            )));
        }
        if !(level > 0.0 && level < 1.0) {
            return Err(Error::Domain(format!(
                "confidence level must be in (0, 1), got {level}"
            )));
        }
        let z = normal_quantile(0.5 + 0.5 * level)?;
        let (mean, half) = (self.mean(), z * self.stderr());
        Ok((mean - half, mean + half))
    }
}

/// Free-function form of [`McEstimate::merge`].
pub fn merge(a: &McEstimate, b: &McEstimate) -> Result<McEstimate> {
    a.merge(b)
}

/// Free-function form of [`McEstimate::confidence_interval`].
pub fn confidence_interval(e: &McEstimate, level: f64) -> Result<(f64, f64)> {
    e.confidence_interval(level)
}

fn worker_pool(workers: usize) -> Result<rayon::ThreadPool> {
    if workers == 0 {
        return Err(Error::Domain("at least one worker is required".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start {workers} workers: {e}")))
}

/// Accumulates every `(γ̄, metric)` pair over the streams in `streams`.
///
/// Stream `j` yields one aggregate `Z`, which is reused for all SNRs and
/// metrics. The result is indexed `[gamma_bar][kind]` and is bit-identical
/// for any worker count.
#[allow(clippy::too_many_arguments)]
pub fn estimate_span(
    kinds: &[MetricKind],
    turbulence: &TurbulenceParams,
    pointing: &PointingGeometry,
    n_elements: usize,
    gamma_bars: &[f64],
    seed: u64,
    streams: Range<u64>,
    workers: usize,
) -> Result<Vec<Vec<McEstimate>>> {
    for kind in kinds {
        kind.validate()?;
    }
    if n_elements == 0 {
        return Err(Error::Domain("at least one element is required".into()));
    }
    if let Some(g) = gamma_bars.iter().find(|g| !(**g > 0.0 && g.is_finite())) {
        return Err(Error::Domain(format!("average SNR must be positive, got {g}")));
    }
    let sampler = ChannelSampler::new(turbulence, pointing)?;
    let family = StreamFamily::new(seed);
    let blank: Vec<Vec<McEstimate>> = gamma_bars
        .iter()
        .map(|&g| {
            let fp = parameter_fingerprint(turbulence, pointing, n_elements, g);
            kinds.iter().map(|&k| McEstimate::empty(k, fp, seed)).collect()
        })
        .collect();
    if streams.is_empty() {
        return Ok(blank);
    }

    let chunks: Vec<Range<u64>> = (0..(streams.end - streams.start).div_ceil(CHUNK_STREAMS))
        .map(|i| {
            let lo = streams.start + i * CHUNK_STREAMS;
            lo..(lo + CHUNK_STREAMS).min(streams.end)
        })
        .collect();

    let run_chunk = |range: &Range<u64>| {
        let mut acc = blank.clone();
        for j in range.clone() {
            let z = sampler.z(n_elements, &mut family.stream(j));
            for (row, &g) in acc.iter_mut().zip(gamma_bars) {
                let gamma = g * z;
                for est in row.iter_mut() {
                    let v = est.kind.evaluate(gamma);
                    est.record(v);
                }
            }
        }
        for row in acc.iter_mut() {
            for est in row.iter_mut() {
                est.spans = vec![(range.start, range.end - 1)];
            }
        }
        acc
    };
    let combine = |a: Vec<Vec<McEstimate>>, b: Vec<Vec<McEstimate>>| {
        a.iter()
            .zip(&b)
            .map(|(ra, rb)| {
                ra.iter()
                    .zip(rb)
                    .map(|(x, y)| x.merge(y).expect("chunks are disjoint"))
                    .collect()
            })
            .collect::<Vec<Vec<McEstimate>>>()
    };

    let pool = worker_pool(workers)?;
    let pooled = pool.install(|| chunks.par_iter().map(run_chunk).reduce(|| blank.clone(), combine));
    Ok(pooled)
}

/// Estimates each metric on a grid of average SNRs from `n_samples` shared
/// aggregate draws (streams `0..n_samples`). Indexed `[gamma_bar][kind]`.
#[allow(clippy::too_many_arguments)]
pub fn estimate_grid(
    kinds: &[MetricKind],
    turbulence: &TurbulenceParams,
    pointing: &PointingGeometry,
    n_elements: usize,
    gamma_bars: &[f64],
    n_samples: u64,
    seed: u64,
    workers: usize,
) -> Result<Vec<Vec<McEstimate>>> {
    if n_samples < MIN_SAMPLES {
        return Err(Error::Domain(format!(
            "need at least {MIN_SAMPLES} samples, got {n_samples}"
        )));
    }
    estimate_span(
        kinds,
        turbulence,
        pointing,
        n_elements,
        gamma_bars,
        seed,
        0..n_samples,
        workers,
    )
}

/// Estimates one metric at the operating point of `cfg`.
pub fn estimate(
    kind: MetricKind,
    turbulence: &TurbulenceParams,
    pointing: &PointingGeometry,
    cfg: &LinkConfig,
    n_samples: u64,
    seed: u64,
    workers: usize,
) -> Result<McEstimate> {
    cfg.validate()?;
    let mut grid = estimate_grid(
        &[kind],
        turbulence,
        pointing,
        cfg.n_elements,
        &[cfg.gamma_bar],
        n_samples,
        seed,
        workers,
    )?;
    Ok(grid.remove(0).remove(0))
}
