//! Experiment orchestration: configuration files, figure presets, sweeps over
//! SNR and element count, and CSV/JSON output.

mod config;
mod emit;
mod run;
mod spec;

pub use config::{parse_config, validate_config, ConfigIssue, ConfigReport};
pub use emit::{emit, from_json, to_csv, to_json, OutputFormat, CSV_HEADER};
pub use run::{run_sweep, SweepRow, SweepTable};
pub use spec::{
    default_gamma_grid, FigurePreset, Metric, PointingSpec, Scenario, SweepSpec, TurbulenceSpec, DEFAULT_SEED,
};
