//! Flat `section.key = value` configuration files.
//!
//! ```text
//! # comments run to the end of the line
//! sweep.preset = fig3            # optional starting point
//! turbulence.alpha = 15
//! pointing.sigma_theta_mrad = 1.0
//! link.n_elements = [16, 64, 256]
//! link.gamma_bar_db = 0:2:40     # start:step:stop, inclusive
//! sweep.metrics = outage, ber
//! mc.samples = 100000
//! ```
//!
//! Units are part of the key names. Every problem in a file is reported,
//! each with the line it came from.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use super::spec::{FigurePreset, Metric, SweepSpec};
use crate::analytic::MAX_MOMENT_ORDER;
use crate::channel::TurbulenceParams;
use crate::montecarlo::MIN_SAMPLES;

/// One problem found in a configuration file.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigIssue {
    /// 1-based line number, when the problem is tied to one line.
    pub line: Option<usize>,
    pub key: Option<String>,
    pub message: String,
}

impl fmt::Display for ConfigIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: ")?,
            None => write!(f, "config: ")?,
        }
        if let Some(key) = &self.key {
            write!(f, "{key}: ")?;
        }
        f.write_str(&self.message)
    }
}

/// All problems found in a configuration file.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigReport {
    pub issues: Vec<ConfigIssue>,
}

impl fmt::Display for ConfigReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} problem(s) in configuration:", self.issues.len())?;
        for issue in &self.issues {
            writeln!(f, "  {issue}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ConfigReport {}

const KEYS: &[&str] = &[
    "turbulence.alpha",
    "turbulence.beta",
    "turbulence.cn2",
    "turbulence.wavelength_nm",
    "pointing.sigma_theta_mrad",
    "pointing.sigma_beta_mrad",
    "pointing.beam_width_cm",
    "pointing.divergence_mrad",
    "pointing.aperture_radius_cm",
    "pointing.l1_m",
    "pointing.l2_m",
    "pointing.c",
    "pointing.direct_link",
    "link.n_elements",
    "link.gamma_bar_db",
    "link.gamma_th_db",
    "link.psi",
    "sweep.preset",
    "sweep.metrics",
    "sweep.asymptotic",
    "sweep.oracle",
    "sweep.moment_order",
    "mc.samples",
    "mc.seed",
];

struct Entry {
    line: usize,
    value: String,
}

struct Parser {
    entries: HashMap<&'static str, Entry>,
    issues: Vec<ConfigIssue>,
}

impl Parser {
    fn issue(&mut self, key: &str, message: impl Into<String>) {
        let line = self.entries.get(key).map(|e| e.line);
        self.issues.push(ConfigIssue {
            line,
            key: Some(key.to_string()),
            message: message.into(),
        });
    }

    fn raw(&self, key: &str) -> Option<String> {
        self.entries.get(key).map(|e| e.value.clone())
    }

    fn number(&mut self, key: &str) -> Option<f64> {
        let raw = self.raw(key)?;
        match raw.parse::<f64>() {
            Ok(v) if v.is_finite() => Some(v),
            _ => {
                self.issue(key, format!("expected a finite number, got '{raw}'"));
                None
            }
        }
    }

    /// A number that must be strictly positive; `unit` names it in messages.
    fn positive(&mut self, key: &str, unit: &str) -> Option<f64> {
        let v = self.number(key)?;
        if v > 0.0 {
            Some(v)
        } else {
            self.issue(key, format!("must be a positive value in {unit}, got {v}"));
            None
        }
    }

    fn non_negative(&mut self, key: &str, unit: &str) -> Option<f64> {
        let v = self.number(key)?;
        if v >= 0.0 {
            Some(v)
        } else {
            self.issue(key, format!("must be a non-negative value in {unit}, got {v}"));
            None
        }
    }

    fn integer(&mut self, key: &str) -> Option<u64> {
        let raw = self.raw(key)?;
        match raw.replace('_', "").parse::<u64>() {
            Ok(v) => Some(v),
            Err(_) => {
                self.issue(key, format!("expected a non-negative integer, got '{raw}'"));
                None
            }
        }
    }

    fn boolean(&mut self, key: &str) -> Option<bool> {
        let raw = self.raw(key)?;
        match raw.as_str() {
            "true" | "yes" | "on" => Some(true),
            "false" | "no" | "off" => Some(false),
            _ => {
                self.issue(key, format!("expected true or false, got '{raw}'"));
                None
            }
        }
    }

    fn list(&self, key: &str) -> Option<Vec<String>> {
        let raw = self.raw(key)?;
        let inner = raw.trim().trim_start_matches('[').trim_end_matches(']');
        Some(
            inner
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect(),
        )
    }

    /// A list of numbers, or an inclusive `start:step:stop` range.
    fn grid(&mut self, key: &str) -> Option<Vec<f64>> {
        let raw = self.raw(key)?;
        if raw.contains(':') {
            let parts: Vec<&str> = raw.split(':').map(str::trim).collect();
            let nums: Vec<Option<f64>> = parts.iter().map(|p| p.parse::<f64>().ok()).collect();
            let (start, step, stop) = match nums.as_slice() {
                [Some(a), Some(b), Some(c)] => (*a, *b, *c),
                _ => {
                    self.issue(key, format!("expected start:step:stop, got '{raw}'"));
                    return None;
                }
            };
            if !(step > 0.0) || stop < start || !(start.is_finite() && stop.is_finite()) {
                self.issue(key, format!("range '{raw}' needs a positive step and stop >= start"));
                return None;
            }
            let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
            if count > 100_000 {
                self.issue(key, format!("range '{raw}' has {count} points"));
                return None;
            }
            return Some((0..count).map(|i| start + i as f64 * step).collect());
        }
        let items = self.list(key)?;
        let mut out = Vec::with_capacity(items.len());
        for item in items {
            match item.parse::<f64>() {
                Ok(v) if v.is_finite() => out.push(v),
                _ => {
                    self.issue(key, format!("'{item}' is not a number"));
                    return None;
                }
            }
        }
        Some(out)
    }
}

fn strictly_increasing<T: PartialOrd>(xs: &[T]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

/// Parses and validates configuration text into a resolved [`SweepSpec`].
pub fn parse_config(text: &str) -> Result<SweepSpec, ConfigReport> {
    let mut parser = Parser {
        entries: HashMap::new(),
        issues: Vec::new(),
    };

    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            parser.issues.push(ConfigIssue {
                line: Some(line),
                key: None,
                message: format!("expected 'key = value', got '{content}'"),
            });
            continue;
        };
        let key = key.trim();
        let value = value.trim().trim_matches('"').to_string();
        let Some(&known) = KEYS.iter().find(|k| **k == key) else {
            parser.issues.push(ConfigIssue {
                line: Some(line),
                key: Some(key.to_string()),
                message: "unknown key".into(),
            });
            continue;
        };
        if let Some(prev) = parser.entries.get(known) {
            parser.issues.push(ConfigIssue {
                line: Some(line),
                key: Some(key.to_string()),
                message: format!("duplicate key (first set on line {})", prev.line),
            });
            continue;
        }
        parser.entries.insert(known, Entry { line, value });
    }

    let mut spec = match parser.raw("sweep.preset") {
        Some(name) => match name.parse::<FigurePreset>() {
            Ok(p) => SweepSpec::preset(p),
            Err(e) => {
                parser.issue("sweep.preset", e);
                SweepSpec::default()
            }
        },
        None => SweepSpec::default(),
    };

    // Sweep-level settings.
    if let Some(grid) = parser.grid("link.gamma_bar_db") {
        if grid.is_empty() {
            parser.issue("link.gamma_bar_db", "grid is empty");
        } else if !strictly_increasing(&grid) {
            parser.issue("link.gamma_bar_db", "grid must be strictly increasing");
        } else {
            spec.gamma_bar_db = grid;
        }
    }
    if let Some(v) = parser.number("link.gamma_th_db") {
        spec.gamma_th_db = v;
    }
    if let Some(raw) = parser.raw("link.psi") {
        let named = match raw.to_ascii_lowercase().as_str() {
            "bpsk" => Some(1.0),
            "bfsk" => Some(0.5),
            "msk" => Some(0.75),
            _ => None,
        };
        spec.psi = match named {
            Some(psi) => psi,
            None => parser
                .positive("link.psi", "units of the modulation coefficient")
                .unwrap_or(spec.psi),
        };
    }
    if let Some(items) = parser.list("sweep.metrics") {
        let mut metrics = Vec::new();
        for item in items {
            match item.parse::<Metric>() {
                Ok(m) if metrics.contains(&m) => parser.issue("sweep.metrics", format!("'{m}' listed twice")),
                Ok(m) => metrics.push(m),
                Err(e) => parser.issue("sweep.metrics", e),
            }
        }
        if metrics.is_empty() {
            parser.issue("sweep.metrics", "no metrics selected");
        } else {
            spec.metrics = metrics;
        }
    }
    if let Some(v) = parser.boolean("sweep.asymptotic") {
        spec.include_asymptotic = v;
    }
    if let Some(v) = parser.boolean("sweep.oracle") {
        spec.include_oracle = v;
    }
    if let Some(v) = parser.integer("sweep.moment_order") {
        if v == 0 || v > MAX_MOMENT_ORDER as u64 {
            parser.issue(
                "sweep.moment_order",
                format!("must be between 1 and {MAX_MOMENT_ORDER}, got {v}"),
            );
        } else {
            spec.moment_order = v as u32;
        }
    }
    if let Some(v) = parser.integer("mc.samples") {
        if v != 0 && v < MIN_SAMPLES {
            parser.issue(
                "mc.samples",
                format!("must be 0 (disabled) or at least {MIN_SAMPLES}, got {v}"),
            );
        } else {
            spec.mc_samples = v;
        }
    }
    if let Some(v) = parser.integer("mc.seed") {
        spec.seed = v;
    }

    // Scenario-level settings apply to every scenario of the sweep.
    let n_elements = parser.list("link.n_elements").and_then(|items| {
        let parsed: Result<Vec<usize>, _> = items.iter().map(|s| s.replace('_', "").parse::<usize>()).collect();
        match parsed {
            Ok(ns) if ns.is_empty() => {
                parser.issue("link.n_elements", "list is empty");
                None
            }
            Ok(ns) if ns.contains(&0) => {
                parser.issue("link.n_elements", "element counts must be at least 1");
                None
            }
            Ok(ns) if !strictly_increasing(&ns) => {
                parser.issue("link.n_elements", "element counts must be strictly increasing");
                None
            }
            Ok(ns) => Some(ns),
            Err(_) => {
                parser.issue("link.n_elements", "expected a list of positive integers");
                None
            }
        }
    });
    let alpha = parser.positive("turbulence.alpha", "dimensionless shape units");
    let beta = parser.positive("turbulence.beta", "dimensionless shape units");
    let cn2 = parser.positive("turbulence.cn2", "m^(-2/3)");
    let wavelength_nm = parser.positive("turbulence.wavelength_nm", "nm");
    if cn2.is_some() && (alpha.is_some() || beta.is_some()) {
        parser.issue(
            "turbulence.cn2",
            "give either turbulence.cn2 or turbulence.alpha/beta, not both",
        );
    }
    let sigma_theta = parser.positive("pointing.sigma_theta_mrad", "mrad");
    let sigma_beta = parser.non_negative("pointing.sigma_beta_mrad", "mrad");
    let beam_width = parser.positive("pointing.beam_width_cm", "cm");
    let divergence = parser.positive("pointing.divergence_mrad", "mrad");
    let aperture = parser.positive("pointing.aperture_radius_cm", "cm");
    let l1 = parser.non_negative("pointing.l1_m", "m");
    let l2 = parser.positive("pointing.l2_m", "m");
    let c = parser.positive("pointing.c", "dimensionless exponent units");
    let direct_link = parser.boolean("pointing.direct_link");

    for scenario in spec.scenarios.iter_mut() {
        if let Some(ns) = &n_elements {
            scenario.n_elements = ns.clone();
        }
        let t = &mut scenario.turbulence;
        if let Some(v) = alpha {
            t.alpha = v;
        }
        if let Some(v) = beta {
            t.beta = v;
        }
        if let Some(v) = wavelength_nm {
            t.wavelength_nm = v;
        }
        let p = &mut scenario.pointing;
        if let Some(v) = direct_link {
            p.direct_link = v;
            if v {
                p.l1_m = 0.0;
                p.sigma_beta_mrad = 0.0;
            }
        }
        for (slot, value) in [
            (&mut p.sigma_theta_mrad, sigma_theta),
            (&mut p.sigma_beta_mrad, sigma_beta),
            (&mut p.aperture_radius_cm, aperture),
            (&mut p.l1_m, l1),
            (&mut p.l2_m, l2),
        ] {
            if let Some(v) = value {
                *slot = v;
            }
        }
        if let Some(v) = c {
            p.c = Some(v);
        }
        match (beam_width, divergence) {
            (Some(w), d) => {
                p.beam_width_cm = w;
                p.divergence_mrad = d;
            }
            (None, Some(d)) => {
                // ω_z = φ·L with φ in mrad and L in m, expressed in cm.
                p.beam_width_cm = d * (p.l1_m + p.l2_m) / 10.0;
                p.divergence_mrad = Some(d);
            }
            (None, None) => {}
        }
        if let Some(cn2) = cn2 {
            let path = p.l1_m + p.l2_m;
            match TurbulenceParams::derive(cn2, t.wavelength_nm * 1e-9, path, p.aperture_radius_cm * 1e-2) {
                Ok(derived) => {
                    t.alpha = derived.alpha;
                    t.beta = derived.beta;
                    t.cn2 = Some(cn2);
                }
                Err(e) => parser.issue("turbulence.cn2", e.to_string()),
            }
        }
    }

    // Final consistency: every scenario must produce a valid channel.
    if parser.issues.is_empty() {
        for scenario in &spec.scenarios {
            let name = scenario.label.clone().unwrap_or_else(|| "default".into());
            if let Err(e) = scenario.turbulence() {
                parser.issues.push(ConfigIssue {
                    line: None,
                    key: None,
                    message: format!("scenario {name}: {e}"),
                });
            }
            if let Err(e) = scenario.pointing() {
                parser.issues.push(ConfigIssue {
                    line: None,
                    key: None,
                    message: format!("scenario {name}: {e}"),
                });
            }
        }
    }

    if parser.issues.is_empty() {
        Ok(spec)
    } else {
        parser.issues.sort_by_key(|i| i.line.unwrap_or(usize::MAX));
        Err(ConfigReport { issues: parser.issues })
    }
}

/// Reads and validates a configuration file.
pub fn validate_config(path: &Path) -> Result<SweepSpec, ConfigReport> {
    match std::fs::read_to_string(path) {
        Ok(text) => parse_config(&text),
        Err(e) => Err(ConfigReport {
            issues: vec![ConfigIssue {
                line: None,
                key: None,
                message: format!("cannot read {}: {e}", path.display()),
            }],
        }),
    }
}
