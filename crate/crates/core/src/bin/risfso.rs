use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use risfso::sweep::{emit, run_sweep, validate_config, FigurePreset, OutputFormat, SweepSpec};

#[derive(Parser)]
#[command(
    name = "risfso",
    version,
    about = "RIS-aided FSO link sweeps: analytic, asymptotic, oracle and Monte Carlo"
)]
struct Cli {
    /// Worker threads for Monte Carlo.
    #[arg(long, global = true, env = "RISFSO_WORKERS")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the sweep described by a configuration file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
    },
    /// Reproduce one of the figure presets as data.
    Figure {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(["fig2", "fig3", "fig4", "fig5"]))]
        preset: String,
        /// Monte Carlo draws per element count (0 disables simulation).
        #[arg(long, default_value_t = 10_000)]
        mc_samples: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
    },
    /// Check a configuration file and print the resolved sweep.
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
}

fn execute(spec: &SweepSpec, workers: usize, out: Option<PathBuf>, format: OutputFormat) -> ExitCode {
    let table = match run_sweep(spec, workers) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let clamps = table.clamp_events();
    if clamps > 0 {
        eprintln!("note: {clamps} value(s) clamped into range");
    }
    match emit(&table, format, out.as_deref()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            ExitCode::FAILURE
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
        .max(1);

    match cli.command {
        Command::Sweep {
            config,
            seed,
            out,
            format,
        } => match validate_config(&config) {
            Ok(mut spec) => {
                if let Some(seed) = seed {
                    spec.seed = seed;
                }
                execute(&spec, workers, out, format)
            }
            Err(report) => {
                eprint!("{report}");
                ExitCode::from(2)
            }
        },
        Command::Figure {
            preset,
            mc_samples,
            seed,
            out,
            format,
        } => {
            let preset: FigurePreset = preset.parse().expect("clap restricts the preset names");
            let mut spec = SweepSpec::preset(preset);
            spec.mc_samples = mc_samples;
            if let Some(seed) = seed {
                spec.seed = seed;
            }
            execute(&spec, workers, out, format)
        }
        Command::Validate { config } => match validate_config(&config) {
            Ok(spec) => {
                println!("{}", serde_json::to_string_pretty(&spec).expect("spec serializes"));
                ExitCode::SUCCESS
            }
            Err(report) => {
                eprint!("{report}");
                ExitCode::from(2)
            }
        },
    }
}
