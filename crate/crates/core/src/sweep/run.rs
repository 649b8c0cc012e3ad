use serde::{Deserialize, Serialize};

use super::spec::{Metric, Scenario, SweepSpec};
use crate::analytic::{
    amount_of_fading, asymptotic_outage, asymptotic_profile, average_ber, channel_capacity, generalized_moment,
    oracle_metric, outage_probability, MomentSummary, OracleKind,
};
use crate::channel::{PointingGeometry, TurbulenceParams};
use crate::error::{Error, Result};
use crate::montecarlo::{estimate_grid, McEstimate, MetricKind, MIN_SAMPLES};

/// One `(γ̄, N, metric)` result. Absent values are `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub gamma_bar_db: f64,
    pub n_elements: usize,
    /// Metric name, suffixed `@label` for labelled scenarios.
    pub metric: String,
    pub analytic: Option<f64>,
    pub asymptotic: Option<f64>,
    pub mc_mean: Option<f64>,
    pub mc_stderr: Option<f64>,
    pub oracle: Option<f64>,
    pub n_samples: Option<u64>,
    pub seed: Option<u64>,
    /// Number of values in this row that were clamped into range.
    pub clamp_events: u32,
    /// Per-row failures that did not stop the sweep.
    pub notes: Vec<String>,
}

/// A finished sweep together with the configuration that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub config: SweepSpec,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    pub fn clamp_events(&self) -> u32 {
        self.rows.iter().map(|r| r.clamp_events).sum()
    }

    /// Rows of one metric name (including any `@label`) and element count,
    /// in grid order.
    pub fn series(&self, metric: &str, n_elements: usize) -> Vec<&SweepRow> {
        self.rows
            .iter()
            .filter(|r| r.metric == metric && r.n_elements == n_elements)
            .collect()
    }
}

struct Context<'a> {
    spec: &'a SweepSpec,
    turbulence: TurbulenceParams,
    pointing: PointingGeometry,
    gamma_th: f64,
}

/// Monte Carlo kinds needed for `metric`: the first is reported, the second
/// (amount of fading only) is the first moment.
fn mc_kinds(metric: Metric, ctx: &Context) -> Vec<MetricKind> {
    match metric {
        Metric::Outage => vec![MetricKind::Outage { gamma_th: ctx.gamma_th }],
        Metric::Ber => vec![MetricKind::Ber { psi: ctx.spec.psi }],
        Metric::Capacity => vec![MetricKind::Capacity],
        Metric::Moments => vec![MetricKind::Moment(ctx.spec.moment_order)],
        Metric::Af => vec![MetricKind::Moment(ctx.spec.moment_order), MetricKind::Moment(1)],
    }
}

fn record<T>(row: &mut SweepRow, what: &str, r: Result<T>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) => {
            row.notes.push(format!("{what}: {e}"));
            None
        }
    }
}

fn analytic_value(
    metric: Metric,
    ctx: &Context,
    ms: &MomentSummary,
    gamma_bar: f64,
    row: &mut SweepRow,
) -> Option<f64> {
    let n = ctx.spec.moment_order;
    match metric {
        Metric::Outage => {
            let out = outage_probability(ctx.gamma_th, ms, gamma_bar);
            row.clamp_events += out.clamped as u32;
            Some(out.value)
        }
        Metric::Ber => {
            let ber = record(row, "analytic", average_ber(ctx.spec.psi, ms, gamma_bar))?;
            row.clamp_events += ber.clamped as u32;
            Some(ber.value)
        }
        Metric::Capacity => {
            let cap = record(row, "analytic", channel_capacity(ms, gamma_bar))?;
            row.clamp_events += cap.clamped as u32;
            if cap.outside_fit_window {
                row.notes.push("capacity fit used beyond its validity window".into());
            }
            Some(cap.bits)
        }
        Metric::Af => record(row, "analytic", amount_of_fading(n, ms, gamma_bar)),
        Metric::Moments => record(row, "analytic", generalized_moment(n, ms, gamma_bar)),
    }
}

fn oracle_value(metric: Metric, ctx: &Context, ms: &MomentSummary, gamma_bar: f64, row: &mut SweepRow) -> Option<f64> {
    let n = ctx.spec.moment_order;
    let run = |kind| oracle_metric(kind, ms, gamma_bar).map(|i| i.value);
    let value = match metric {
        Metric::Outage => run(OracleKind::Outage { gamma_th: ctx.gamma_th }),
        Metric::Ber => run(OracleKind::BerExactQ { psi: ctx.spec.psi }),
        Metric::Capacity => run(OracleKind::Capacity),
        Metric::Moments => run(OracleKind::Moment(n)),
        Metric::Af => {
            run(OracleKind::Moment(n)).and_then(|mn| run(OracleKind::Moment(1)).map(|m1| mn / m1.powi(n as i32) - 1.0))
        }
    };
    record(row, "oracle", value)
}

fn fill_mc(metric: Metric, estimates: &[McEstimate], row: &mut SweepRow) {
    let first = &estimates[0];
    row.n_samples = Some(first.n_samples());
    row.seed = Some(first.seed());
    match metric {
        Metric::Af => {
            let n = match first.kind() {
                MetricKind::Moment(n) => n,
                _ => unreachable!("amount of fading is built from moments"),
            };
            row.mc_mean = Some(first.mean() / estimates[1].mean().powi(n as i32) - 1.0);
        }
        _ => {
            row.mc_mean = Some(first.mean());
            row.mc_stderr = Some(first.stderr());
        }
    }
}

/// Non-finite values cannot be represented in the outputs; drop them with a
/// note instead.
fn sanitize(row: &mut SweepRow) {
    let mut dropped = Vec::new();
    for (name, slot) in [
        ("analytic", &mut row.analytic),
        ("asymptotic", &mut row.asymptotic),
        ("mc_mean", &mut row.mc_mean),
        ("mc_stderr", &mut row.mc_stderr),
        ("oracle", &mut row.oracle),
    ] {
        if let Some(v) = *slot {
            if !v.is_finite() {
                *slot = None;
                dropped.push(format!("{name}: non-finite value {v}"));
            }
        }
    }
    row.notes.extend(dropped);
}

fn run_scenario(spec: &SweepSpec, scenario: &Scenario, workers: usize, rows: &mut Vec<SweepRow>) -> Result<()> {
    let ctx = Context {
        spec,
        turbulence: scenario.turbulence()?,
        pointing: scenario.pointing()?,
        gamma_th: crate::db_to_linear(spec.gamma_th_db),
    };
    let gamma_bars: Vec<f64> = spec.gamma_bar_db.iter().map(|&db| crate::db_to_linear(db)).collect();

    for &n in &scenario.n_elements {
        let ms = MomentSummary::from_channel(&ctx.turbulence, &ctx.pointing, n)?;
        let profile = if spec.include_asymptotic && spec.metrics.contains(&Metric::Outage) {
            Some(asymptotic_profile(&ctx.turbulence, &ctx.pointing, n))
        } else {
            None
        };

        // One shared set of aggregate draws serves every SNR and metric.
        let mut offsets = Vec::new();
        let mut kinds = Vec::new();
        for &metric in &spec.metrics {
            offsets.push(kinds.len());
            kinds.extend(mc_kinds(metric, &ctx));
        }
        let mc = if spec.mc_samples > 0 {
            Some(estimate_grid(
                &kinds,
                &ctx.turbulence,
                &ctx.pointing,
                n,
                &gamma_bars,
                spec.mc_samples,
                spec.seed,
                workers,
            )?)
        } else {
            None
        };

        for (gi, (&db, &gamma_bar)) in spec.gamma_bar_db.iter().zip(&gamma_bars).enumerate() {
            for (mi, &metric) in spec.metrics.iter().enumerate() {
                let mut row = SweepRow {
                    gamma_bar_db: db,
                    n_elements: n,
                    metric: scenario.metric_name(metric),
                    analytic: None,
                    asymptotic: None,
                    mc_mean: None,
                    mc_stderr: None,
                    oracle: None,
                    n_samples: None,
                    seed: None,
                    clamp_events: 0,
                    notes: Vec::new(),
                };
                row.analytic = analytic_value(metric, &ctx, &ms, gamma_bar, &mut row);
                if metric == Metric::Outage {
                    if let Some(profile) = &profile {
                        row.asymptotic = match profile {
                            Ok(p) => record(
                                &mut row,
                                "asymptotic",
                                asymptotic_outage(ctx.gamma_th, p, &ctx.turbulence, &ctx.pointing, gamma_bar, n),
                            ),
                            Err(e) => {
                                row.notes.push(format!("asymptotic: {e}"));
                                None
                            }
                        };
                    }
                }
                if spec.include_oracle {
                    row.oracle = oracle_value(metric, &ctx, &ms, gamma_bar, &mut row);
                }
                if let Some(grid) = &mc {
                    let width = mc_kinds(metric, &ctx).len();
                    fill_mc(metric, &grid[gi][offsets[mi]..offsets[mi] + width], &mut row);
                }
                sanitize(&mut row);
                rows.push(row);
            }
        }
    }
    Ok(())
}

/// Evaluates every scenario, element count, SNR and metric of `spec`.
///
/// Failures confined to one value (an unsupported moment, a degenerate
/// asymptote, an oracle that misses its tolerance) leave that cell empty and
/// are listed in the row's notes. The output is identical for any `workers`.
pub fn run_sweep(spec: &SweepSpec, workers: usize) -> Result<SweepTable> {
    if spec.gamma_bar_db.is_empty() || !spec.gamma_bar_db.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Domain(
            "SNR grid must be non-empty and strictly increasing".into(),
        ));
    }
    if spec.metrics.is_empty() {
        return Err(Error::Domain("no metrics requested".into()));
    }
    if spec.mc_samples != 0 && spec.mc_samples < MIN_SAMPLES {
        return Err(Error::Domain(format!(
            "Monte Carlo needs at least {MIN_SAMPLES} samples"
        )));
    }
    let mut rows = Vec::new();
    for scenario in &spec.scenarios {
        run_scenario(spec, scenario, workers, &mut rows)?;
    }
    Ok(SweepTable {
        config: spec.clone(),
        rows,
    })
}
