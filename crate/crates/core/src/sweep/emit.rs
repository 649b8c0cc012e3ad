use std::fmt::Write as _;
use std::io;
use std::path::Path;
use std::str::FromStr;

use super::run::SweepTable;

pub const CSV_HEADER: &str =
    "gamma_bar_db,n_elements,metric,analytic,asymptotic,mc_mean,mc_stderr,oracle,n_samples,seed";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(format!("unknown format '{s}' (expected csv or json)")),
        }
    }
}

fn cell<T>(v: Option<T>, f: impl Fn(T) -> String) -> String {
    v.map(f).unwrap_or_default()
}

pub fn to_csv(table: &SweepTable) -> String {
    let mut out = String::with_capacity(64 * (table.rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    let sci = |x: f64| format!("{x:e}");
    for r in &table.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.gamma_bar_db,
            r.n_elements,
            r.metric,
            cell(r.analytic, sci),
            cell(r.asymptotic, sci),
            cell(r.mc_mean, sci),
            cell(r.mc_stderr, sci),
            cell(r.oracle, sci),
            cell(r.n_samples, |n| n.to_string()),
            cell(r.seed, |s| s.to_string()),
        );
    }
    out
}

pub fn to_json(table: &SweepTable) -> String {
    serde_json::to_string_pretty(table).expect("sweep tables contain only finite numbers and strings")
}

pub fn from_json(text: &str) -> serde_json::Result<SweepTable> {
    serde_json::from_str(text)
}

/// Writes `table` to `path`, or to standard output when `path` is `None`.
pub fn emit(table: &SweepTable, format: OutputFormat, path: Option<&Path>) -> io::Result<()> {
    if table.rows.is_empty() {
        return Err(io::Error::new(
            io::ErrorKind::InvalidInput,
            "refusing to emit an empty table",
        ));
    }
    let text = match format {
        OutputFormat::Csv => to_csv(table),
        OutputFormat::Json => to_json(table),
    };
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            use io::Write;
            io::stdout().lock().write_all(text.as_bytes())
        }
    }
}
