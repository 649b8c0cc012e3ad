use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::channel::{PointingGeometry, TurbulenceParams};
use crate::error::Result;

/// Performance metric requested from a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Outage,
    Ber,
    Capacity,
    /// Amount of fading of order `moment_order`.
    Af,
    /// Raw moment `E[γⁿ]` of order `moment_order`.
    Moments,
}

impl Metric {
    pub const ALL: [Metric; 5] = [
        Metric::Outage,
        Metric::Ber,
        Metric::Capacity,
        Metric::Af,
        Metric::Moments,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Metric::Outage => "outage",
            Metric::Ber => "ber",
            Metric::Capacity => "capacity",
            Metric::Af => "af",
            Metric::Moments => "moments",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown metric '{s}' (expected one of outage, ber, capacity, af, moments)"))
    }
}

/// Figure reproduction presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FigurePreset {
    /// Capacity versus SNR for several element counts, plus a direct link.
    Fig2,
    /// Outage at N = 128 for three beam-width/aperture pairs.
    Fig3,
    /// Outage and its high-SNR asymptote under strong pointing jitter.
    Fig4,
    /// BER on an unequal-hop geometry for three turbulence/jitter settings.
    Fig5,
}

impl FigurePreset {
    pub const ALL: [FigurePreset; 4] = [
        FigurePreset::Fig2,
        FigurePreset::Fig3,
        FigurePreset::Fig4,
        FigurePreset::Fig5,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FigurePreset::Fig2 => "fig2",
            FigurePreset::Fig3 => "fig3",
            FigurePreset::Fig4 => "fig4",
            FigurePreset::Fig5 => "fig5",
        }
    }
}

impl FromStr for FigurePreset {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FigurePreset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown preset '{s}' (expected fig2, fig3, fig4 or fig5)"))
    }
}

impl fmt::Display for FigurePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Turbulence section of a scenario. When `cn2` is set, `alpha` and `beta`
/// hold the values derived from it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TurbulenceSpec {
    pub alpha: f64,
    pub beta: f64,
    pub cn2: Option<f64>,
    pub wavelength_nm: f64,
}

impl Default for TurbulenceSpec {
    fn default() -> Self {
        Self {
            alpha: 15.0,
            beta: 10.0,
            cn2: None,
            wavelength_nm: 1550.0,
        }
    }
}

/// Pointing section of a scenario, in the units named by each field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointingSpec {
    pub sigma_theta_mrad: f64,
    pub sigma_beta_mrad: f64,
    pub l1_m: f64,
    pub l2_m: f64,
    pub beam_width_cm: f64,
    /// Divergence the beam width was derived from, if it was.
    pub divergence_mrad: Option<f64>,
    pub aperture_radius_cm: f64,
    /// Replacement for the geometry-derived jitter exponent.
    pub c: Option<f64>,
    /// Single unreflected path of length `l2_m`.
    pub direct_link: bool,
}

impl Default for PointingSpec {
    fn default() -> Self {
        Self {
            sigma_theta_mrad: 1.0,
            sigma_beta_mrad: 0.5,
            l1_m: 150.0,
            l2_m: 150.0,
            beam_width_cm: 120.0,
            divergence_mrad: None,
            aperture_radius_cm: 10.0,
            c: None,
            direct_link: false,
        }
    }
}

/// One parameter set swept over the SNR grid for each of its element counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    /// Appended to metric names as `metric@label`.
    pub label: Option<String>,
    pub turbulence: TurbulenceSpec,
    pub pointing: PointingSpec,
    pub n_elements: Vec<usize>,
}

impl Default for Scenario {
    fn default() -> Self {
        Self {
            label: None,
            turbulence: TurbulenceSpec::default(),
            pointing: PointingSpec::default(),
            n_elements: vec![128],
        }
    }
}

impl Scenario {
    pub fn turbulence(&self) -> Result<TurbulenceParams> {
        TurbulenceParams::new(self.turbulence.alpha, self.turbulence.beta)
    }

    pub fn pointing(&self) -> Result<PointingGeometry> {
        let p = &self.pointing;
        let geometry = if p.direct_link {
            PointingGeometry::direct_link(
                p.sigma_theta_mrad * 1e-3,
                p.l2_m,
                p.beam_width_cm * 1e-2,
                p.aperture_radius_cm * 1e-2,
            )?
        } else {
            PointingGeometry::derive(
                p.sigma_theta_mrad * 1e-3,
                p.sigma_beta_mrad * 1e-3,
                p.l1_m,
                p.l2_m,
                p.beam_width_cm * 1e-2,
                p.aperture_radius_cm * 1e-2,
            )?
        };
        match p.c {
            Some(c) => geometry.with_c(c),
            None => Ok(geometry),
        }
    }

    pub fn metric_name(&self, metric: Metric) -> String {
        match &self.label {
            Some(label) => format!("{metric}@{label}"),
            None => metric.to_string(),
        }
    }
}

/// Fully resolved sweep description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub preset: Option<FigurePreset>,
    pub scenarios: Vec<Scenario>,
    pub gamma_bar_db: Vec<f64>,
    pub gamma_th_db: f64,
    pub psi: f64,
    pub metrics: Vec<Metric>,
    pub moment_order: u32,
    pub include_asymptotic: bool,
    pub include_oracle: bool,
    /// Monte Carlo draws per element count; zero disables simulation.
    pub mc_samples: u64,
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 20_240_601;

/// `0, 2, …, 40` dB.
pub fn default_gamma_grid() -> Vec<f64> {
    (0..=20).map(|i| 2.0 * i as f64).collect()
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            preset: None,
            scenarios: vec![Scenario::default()],
            gamma_bar_db: default_gamma_grid(),
            gamma_th_db: 0.0,
            psi: 1.0,
            metrics: vec![Metric::Outage, Metric::Ber, Metric::Capacity],
            moment_order: 2,
            include_asymptotic: false,
            include_oracle: false,
            mc_samples: 0,
            seed: DEFAULT_SEED,
        }
    }
}

impl SweepSpec {
    /// Parameter sets of the published figures.
    pub fn preset(preset: FigurePreset) -> Self {
        let base = SweepSpec {
            preset: Some(preset),
            ..SweepSpec::default()
        };
        let scenario = |label: &str, n: &[usize]| Scenario {
            label: Some(label.to_string()),
            n_elements: n.to_vec(),
            ..Scenario::default()
        };
        match preset {
            FigurePreset::Fig2 => {
                let mut direct = scenario("direct", &[1]);
                direct.pointing = PointingSpec {
                    sigma_beta_mrad: 0.0,
                    l1_m: 0.0,
                    l2_m: 100.0,
                    direct_link: true,
                    ..PointingSpec::default()
                };
                SweepSpec {
                    scenarios: vec![direct, scenario("ris", &[1, 16, 64, 128, 256])],
                    metrics: vec![Metric::Capacity],
                    ..base
                }
            }
            FigurePreset::Fig3 => {
                let variant = |wz: f64, a: f64| {
                    let mut s = scenario(&format!("wz{wz}cm_a{a}cm"), &[128]);
                    s.pointing.beam_width_cm = wz;
                    s.pointing.aperture_radius_cm = a;
                    s
                };
                SweepSpec {
                    scenarios: vec![variant(150.0, 10.0), variant(120.0, 10.0), variant(120.0, 15.0)],
                    metrics: vec![Metric::Outage],
                    ..base
                }
            }
            FigurePreset::Fig4 => {
                let mut s = scenario("strong_jitter", &[1, 2, 4]);
                s.turbulence.alpha = 6.5;
                s.turbulence.beta = 6.0;
                s.pointing.sigma_theta_mrad = 20.0;
                s.pointing.sigma_beta_mrad = 20.0;
                s.pointing.c = Some(0.5);
                SweepSpec {
                    scenarios: vec![s],
                    metrics: vec![Metric::Outage],
                    include_asymptotic: true,
                    gamma_bar_db: (0..=16).map(|i| 5.0 * i as f64).collect(),
                    ..base
                }
            }
            FigurePreset::Fig5 => {
                let variant = |alpha: f64, beta: f64, sigma_theta_mrad: f64| {
                    let mut s = scenario(&format!("a{alpha}_b{beta}_st{sigma_theta_mrad}mrad"), &[128]);
                    s.turbulence.alpha = alpha;
                    s.turbulence.beta = beta;
                    s.pointing.sigma_theta_mrad = sigma_theta_mrad;
                    s.pointing.l1_m = 350.0;
                    s.pointing.l2_m = 250.0;
                    s.pointing.aperture_radius_cm = 20.0;
                    s
                };
                SweepSpec {
                    scenarios: vec![
                        variant(15.0, 10.0, 1.0),
                        variant(4.2, 1.4, 1.0),
                        variant(15.0, 10.0, 2.0),
                    ],
                    metrics: vec![Metric::Ber],
                    ..base
                }
            }
        }
    }
}
