//! Acceptance checks. Prints one PASS/FAIL line per criterion with the
//! measured figures and wall time.
//!
//! Some criteria are known not to hold for the model as specified; they are
//! evaluated at their stated thresholds and reported as FAIL. The process
//! exits non-zero on any failure only when `ACCEPTANCE_STRICT=1`.

#![allow(clippy::field_reassign_with_default)]

use std::time::{Duration, Instant};

use risfso::analytic::*;
use risfso::channel::*;
use risfso::db_to_linear;
use risfso::montecarlo::{estimate_grid, estimate_span, ExactSum, McEstimate, MetricKind};
use risfso::sweep::{run_sweep, to_csv, FigurePreset, SweepSpec};

const SEED: u64 = 20_240_601;

type Check = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
}

fn workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        ((a - b) / b).abs()
    }
}

fn sampler_fidelity() -> Outcome {
    let (t, g) = (default_turbulence(), default_pointing());
    let family = StreamFamily::new(SEED);

    let mut h: Vec<f64> = (0..1_000_000).map(|j| sample_h_p(&g, &mut family.stream(j))).collect();
    h.sort_by(f64::total_cmp);
    let n = h.len() as f64;
    let ks = h
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = g.cdf(x);
            (f - i as f64 / n).abs().max(((i + 1) as f64 / n - f).abs())
        })
        .fold(0.0, f64::max);

    let sampler = ChannelSampler::new(&t, &g).unwrap();
    let draws = 10_000_000u64;
    let (mut s1, mut s2) = (ExactSum::new(), ExactSum::new());
    for j in 0..draws {
        let b = sampler.b(&mut family.stream(1_000_000 + j));
        s1.add(b);
        s2.add(b * b);
    }
    let mean = s1.value() / draws as f64;
    let var = (s2.value() - draws as f64 * mean * mean) / (draws - 1) as f64;
    let ms = MomentSummary::from_channel(&t, &g, 1).unwrap();
    let (em, ev) = (rel(mean, ms.m1), rel(var, ms.delta1_sq));
    Outcome {
        pass: ks < 0.01 && em < 0.01 && ev < 0.02,
        detail: format!(
            "KS(h_p, 1e6) = {ks:.5} (< 0.01); E[B] rel err {em:.2e} (< 1%); Var[B] rel err {ev:.2e} (< 2%)"
        ),
    }
}

fn closed_form_exactness() -> Outcome {
    let (t, g) = (default_turbulence(), default_pointing());
    let mut worst = (0.0f64, String::new());
    let mut note = |err: f64, what: String| {
        if err > worst.0 {
            worst = (err, what);
        }
    };
    let mut failures = 0;
    for n in [1, 16, 64, 128, 256] {
        let ms = MomentSummary::from_channel(&t, &g, n).unwrap();
        for db in [5.0, 15.0, 25.0, 35.0] {
            let gb = db_to_linear(db);
            let mut check = |value: risfso::Result<f64>, kind: OracleKind, name: &str| match (
                value,
                oracle_metric(kind, &ms, gb),
            ) {
                (Ok(v), Ok(o)) => note(rel(v, o.value), format!("{name} N={n} {db} dB")),
                _ => failures += 1,
            };
            check(
                Ok(outage_probability(1.0, &ms, gb).value),
                OracleKind::Outage { gamma_th: 1.0 },
                "outage",
            );
            check(
                average_ber(1.0, &ms, gb).map(|b| b.value),
                OracleKind::BerChiani { psi: 1.0 },
                "ber",
            );
            check(
                channel_capacity(&ms, gb).map(|c| c.bits),
                OracleKind::CapacityFit,
                "capacity",
            );
            for k in 1..=4 {
                check(generalized_moment(k, &ms, gb), OracleKind::Moment(k), "moment");
            }
            let scale = 1.0 / (gb * ms.m);
            for s in [0.1 * scale, scale, 10.0 * scale] {
                check(mgf(s, &ms, gb), OracleKind::Mgf(s), "mgf");
            }
        }
    }
    Outcome {
        pass: failures == 0 && worst.0 < 1e-6,
        detail: format!(
            "worst rel err {:.2e} at {} (< 1e-6); {failures} evaluation failures",
            worst.0, worst.1
        ),
    }
}

fn outage_curves(n: usize, gamma_bars: &[f64]) -> (Vec<f64>, Vec<McEstimate>) {
    let (t, g) = (default_turbulence(), default_pointing());
    let ms = MomentSummary::from_channel(&t, &g, n).unwrap();
    let kinds = [MetricKind::Outage { gamma_th: 1.0 }];
    let grid = estimate_grid(&kinds, &t, &g, n, gamma_bars, 1_000_000, SEED, workers()).unwrap();
    let analytic = gamma_bars
        .iter()
        .map(|&gb| outage_probability(1.0, &ms, gb).value)
        .collect();
    (analytic, grid.into_iter().map(|mut row| row.remove(0)).collect())
}

/// Largest gap between simulated and Gaussian-model outage on SNRs that put
/// the threshold between half and one and a half times the mean of `Z`.
fn clt_discrepancy(n: usize) -> f64 {
    let ms = MomentSummary::from_channel(&default_turbulence(), &default_pointing(), n).unwrap();
    let gamma_bars: Vec<f64> = (0..=100).map(|i| 1.0 / (ms.m * (0.5 + 0.01 * i as f64))).collect();
    let (analytic, mc) = outage_curves(n, &gamma_bars);
    analytic
        .iter()
        .zip(&mc)
        .map(|(a, e)| (a - e.mean()).abs())
        .fold(0.0, f64::max)
}

fn clt_validation() -> Outcome {
    let gamma_db: Vec<f64> = (0..=40).map(|i| 14.0 + 0.25 * i as f64).collect();
    let gamma_bars: Vec<f64> = gamma_db.iter().map(|&d| db_to_linear(d)).collect();
    let (analytic, mc) = outage_curves(128, &gamma_bars);
    let mut checked = 0;
    let mut worst = (0.0f64, 0.0);
    for ((db, a), e) in gamma_db.iter().zip(&analytic).zip(&mc) {
        if (1e-3..=0.5).contains(a) {
            checked += 1;
            let z = (e.mean() - a).abs() / e.stderr();
            if z > worst.0 {
                worst = (z, *db);
            }
        }
    }
    let (d16, d256) = (clt_discrepancy(16), clt_discrepancy(256));
    let agree = checked > 0 && worst.0 <= 3.0;
    Outcome {
        pass: agree && d256 <= d16,
        detail: format!(
            "N=128: {checked} points with P_out in [1e-3, 0.5], worst |MC - model| = {:.1} stderr at {} dB (<= 3); \
             sup gap N=16 {d16:.4}, N=256 {d256:.4} (tightening {})",
            worst.0,
            worst.1,
            if d256 <= d16 { "holds" } else { "violated" }
        ),
    }
}

fn diversity_order() -> Outcome {
    let spec = SweepSpec::preset(FigurePreset::Fig4);
    let scenario = &spec.scenarios[0];
    let (t, g) = (scenario.turbulence().unwrap(), scenario.pointing().unwrap());
    let mut slopes = Vec::new();
    let mut worst = 0.0f64;
    for &n in &scenario.n_elements {
        let p = asymptotic_profile(&t, &g, n).unwrap();
        // Least-squares slope of log10 P against dB over 60..=80 dB.
        let pts: Vec<(f64, f64)> = (60..=80)
            .map(|d| {
                let d = d as f64;
                let lp = ln_asymptotic_outage(1.0, &p, &t, &g, db_to_linear(d), n).unwrap();
                (d, lp / std::f64::consts::LN_10)
            })
            .collect();
        let k = pts.len() as f64;
        let (mx, my) = (
            pts.iter().map(|p| p.0).sum::<f64>() / k,
            pts.iter().map(|p| p.1).sum::<f64>() / k,
        );
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        let slope = sxy / sxx;
        let want = -(1.0 + p.varrho) * n as f64 / 20.0;
        worst = worst.max((slope - want).abs());
        slopes.push(slope);
    }
    let doubling = slopes.windows(2).map(|w| (w[1] / w[0] - 2.0).abs()).fold(0.0, f64::max);
    Outcome {
        pass: worst < 1e-9 && doubling < 1e-9,
        detail: format!(
            "slopes {:?} per dB; max deviation from -(1+rho)N/20 {worst:.1e}; doubling-ratio error {doubling:.1e} (< 1e-9)",
            slopes.iter().map(|s| format!("{s:.6}")).collect::<Vec<_>>()
        ),
    }
}

fn ber_budget() -> Outcome {
    let mut spec = SweepSpec::preset(FigurePreset::Fig5);
    spec.include_oracle = true;
    let table = run_sweep(&spec, 1).unwrap();
    let mut checked = 0;
    let mut worst = (0.0f64, String::new());
    for row in &table.rows {
        let (Some(approx), Some(exact)) = (row.analytic, row.oracle) else {
            continue;
        };
        if (1e-6..=1e-1).contains(&exact) {
            checked += 1;
            let e = rel(approx, exact);
            if e > worst.0 {
                worst = (
                    e,
                    format!(
                        "{} {} dB (approx {approx:.3e}, exact {exact:.3e})",
                        row.metric, row.gamma_bar_db
                    ),
                );
            }
        }
    }
    Outcome {
        pass: checked > 0 && worst.0 <= 0.10,
        detail: format!(
            "{checked} points with Pe in [1e-6, 1e-1]; worst rel err {:.1}% at {} (<= 10%)",
            100.0 * worst.0,
            worst.1
        ),
    }
}

fn capacity_budget() -> Outcome {
    let (t, g) = (default_turbulence(), default_pointing());
    let mut worst = (0.0f64, 0.0);
    for n in [16, 64, 128, 256] {
        let ms = MomentSummary::from_channel(&t, &g, n).unwrap();
        for i in 0..=30 {
            let mean_snr = 10f64.powf(0.1 * i as f64);
            let gb = mean_snr / ms.m;
            let fit = channel_capacity(&ms, gb).unwrap().bits;
            let exact = oracle_metric(OracleKind::Capacity, &ms, gb).unwrap().value;
            let e = rel(fit, exact);
            if e > worst.0 {
                worst = (e, mean_snr);
            }
        }
    }
    let mut monotone = true;
    for db in [10.0, 20.0, 30.0, 40.0] {
        let caps: Vec<f64> = [16, 64, 128, 256]
            .iter()
            .map(|&n| {
                let ms = MomentSummary::from_channel(&t, &g, n).unwrap();
                channel_capacity(&ms, db_to_linear(db)).unwrap().bits
            })
            .collect();
        monotone &= caps.windows(2).all(|w| w[1] > w[0]);
    }
    Outcome {
        pass: worst.0 <= 0.05 && monotone,
        detail: format!(
            "worst fit rel err {:.2}% at mean SNR {:.3} (<= 5%); capacity increasing in N: {monotone}",
            100.0 * worst.0,
            worst.1
        ),
    }
}

fn determinism() -> Outcome {
    let mut spec = SweepSpec::default();
    spec.mc_samples = 100_000;
    spec.scenarios[0].n_elements = vec![16, 128];
    let one = to_csv(&run_sweep(&spec, 1).unwrap());
    let eight = to_csv(&run_sweep(&spec, 8).unwrap());
    let csv_same = one == eight;

    let (t, g) = (default_turbulence(), default_pointing());
    let kinds = [
        MetricKind::Outage { gamma_th: 1.0 },
        MetricKind::Capacity,
        MetricKind::Moment(2),
    ];
    let grid = [db_to_linear(20.0), db_to_linear(30.0)];
    let n = 32;
    let total = 1_000_000u64;
    let sequential = estimate_span(&kinds, &t, &g, n, &grid, SEED, 0..total, 1).unwrap();
    let part = total / 8;
    let mut merged = estimate_span(&kinds, &t, &g, n, &grid, SEED, 0..part, workers()).unwrap();
    for i in 1..8 {
        let piece = estimate_span(&kinds, &t, &g, n, &grid, SEED, i * part..(i + 1) * part, workers()).unwrap();
        for (ra, rb) in merged.iter_mut().zip(&piece) {
            for (a, b) in ra.iter_mut().zip(rb) {
                *a = a.merge(b).unwrap();
            }
        }
    }
    let bit_exact = merged.iter().flatten().zip(sequential.iter().flatten()).all(|(a, b)| {
        a.n_samples() == b.n_samples()
            && a.sum().to_bits() == b.sum().to_bits()
            && a.sum_sq().to_bits() == b.sum_sq().to_bits()
    });
    Outcome {
        pass: csv_same && bit_exact,
        detail: format!(
            "CSV identical for 1 and 8 workers: {csv_same} ({} bytes); 8 x 125k merge equals sequential 1e6 bit-exactly: {bit_exact}",
            one.len()
        ),
    }
}

/// `(metric, gamma_bar_db) -> analytic` read back from emitted CSV.
fn csv_series(csv: &str, metric: &str) -> Vec<(f64, f64)> {
    csv.lines()
        .skip(1)
        .filter_map(|line| {
            let cells: Vec<&str> = line.split(',').collect();
            (cells[2] == metric).then(|| (cells[0].parse().unwrap(), cells[3].parse().unwrap()))
        })
        .collect()
}

fn figure_trends() -> Outcome {
    let fig3 = to_csv(&run_sweep(&SweepSpec::preset(FigurePreset::Fig3), 1).unwrap());
    // beam-width / aperture ratios 15, 12, 8
    let curves: Vec<Vec<(f64, f64)>> = ["outage@wz150cm_a10cm", "outage@wz120cm_a10cm", "outage@wz120cm_a15cm"]
        .iter()
        .map(|m| csv_series(&fig3, m))
        .collect();
    let mut fig3_ok = true;
    let mut deep_crossings = Vec::new();
    for i in 0..curves[0].len() {
        let p: Vec<f64> = curves.iter().map(|c| c[i].1).collect();
        let ordered = p[0] >= p[1] && p[1] >= p[2];
        if p[0] >= 1e-10 {
            fig3_ok &= ordered;
        } else if !ordered {
            deep_crossings.push(curves[0][i].0);
        }
    }
    fig3_ok &= curves[0].iter().zip(&curves[2]).any(|(w, n)| w.1 > n.1);

    let fig5 = to_csv(&run_sweep(&SweepSpec::preset(FigurePreset::Fig5), 1).unwrap());
    let calm = csv_series(&fig5, "ber@a15_b10_st1mrad");
    let shaky = csv_series(&fig5, "ber@a15_b10_st2mrad");
    let fig5_ok = calm.iter().zip(&shaky).all(|(c, s)| s.1 >= c.1) && calm.iter().zip(&shaky).any(|(c, s)| s.1 > c.1);
    Outcome {
        pass: fig3_ok && fig5_ok,
        detail: format!(
            "fig3 outage ordered by beam/aperture ratio where P >= 1e-10: {fig3_ok} \
             (order reverses below 1e-23 at {deep_crossings:?} dB); fig5 BER worse at 2 mrad: {fig5_ok}"
        ),
    }
}

fn main() {
    let criteria: [(&str, Check, Duration); 8] = [
        ("1 sampler fidelity", sampler_fidelity, Duration::from_secs(60)),
        (
            "2 closed-form exactness",
            closed_form_exactness,
            Duration::from_secs(30),
        ),
        ("3 CLT validation", clt_validation, Duration::from_secs(300)),
        ("4 diversity order", diversity_order, Duration::from_secs(5)),
        ("5 BER approximation budget", ber_budget, Duration::from_secs(30)),
        ("6 capacity fit budget", capacity_budget, Duration::from_secs(30)),
        ("7 determinism and merge", determinism, Duration::from_secs(60)),
        ("8 figure trends", figure_trends, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let pass = outcome.pass && in_time;
        failed += !pass as usize;
        println!(
            "{} [{name}] {} | {:.1} s (budget {} s{})",
            if pass { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            budget.as_secs(),
            if in_time { "" } else { ", exceeded" }
        );
    }
    println!("acceptance: {} of 8 criteria pass", 8 - failed);
    if failed > 0 && std::env::var("ACCEPTANCE_STRICT").as_deref() == Ok("1") {
        std::process::exit(1);
    }
}
