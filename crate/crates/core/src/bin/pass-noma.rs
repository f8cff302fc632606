//! Command-line front end. Exit status: 0 success, 1 invalid input,
//! 2 analytic/simulation disagreement, 3 I/O failure.

// `!(x > 0.0)` doubles as a NaN rejection
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pass_noma::model::NetworkConfig;
use pass_noma::runner::{
    compare_report, run_sweep, Dataset, Engine, FigurePreset, MetricSpec, PresetOptions,
    RunnerError, Series, SweepSpec, DEFAULT_OMEGA_I_LIST,
};
use pass_noma::simulator::{OmaScheme, DEFAULT_TRIALS};

const DEFAULT_METRICS: [&str; 8] = [
    "blockage_n:isic",
    "blockage_n:nisic",
    "blockage_f:los",
    "blockage_f:nlos",
    "rate_n:isic",
    "rate_n:nisic",
    "rate_f:los",
    "rate_f:nlos",
];

#[derive(Parser)]
#[command(
    name = "pass-noma",
    version,
    about = "Pinching-antenna NOMA downlink: closed forms vs Monte Carlo"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep transmit SNR over chosen metrics and write a CSV dataset.
    Sweep {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        start: f64,
        #[arg(long, default_value_t = 60.0, allow_negative_numbers = true)]
        stop: f64,
        #[arg(long, default_value_t = 2.0)]
        step: f64,
        /// `metric[:mode][:condition]`, repeatable (e.g. blockage_n:nisic, rate_f:nlos).
        #[arg(long = "metric")]
        metrics: Vec<String>,
    },
    /// Regenerate the curve family behind one figure (fig2 .. fig9).
    Preset {
        fig_id: String,
        #[command(flatten)]
        run: RunArgs,
        /// Residual-interference powers for the imperfect-SIC family.
        #[arg(long, value_delimiter = ',')]
        omega_i_list: Option<Vec<f64>>,
    },
    /// Check analytic rows of a dataset against their Monte Carlo partners.
    Compare { dataset: PathBuf },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: u64,
    /// Output CSV; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// analytic, mc or both
    #[arg(long, default_value = "both")]
    engine: String,
    #[arg(long, default_value = "tdma-half")]
    oma_scheme: String,
    #[arg(long, default_value_t = pass_noma::numerics::DEFAULT_QUADRATURE_ORDER)]
    quad_order: usize,
}

fn validation(e: impl ToString) -> RunnerError {
    RunnerError::Validation(e.to_string())
}

impl RunArgs {
    fn config(&self) -> Result<NetworkConfig, RunnerError> {
        match &self.config {
            Some(path) => NetworkConfig::from_path(path).map_err(|e| match e {
                pass_noma::model::ModelError::Io(source) => RunnerError::Io {
                    path: path.clone(),
                    source,
                },
                other => other.into(),
            }),
            None => Ok(NetworkConfig::default()),
        }
    }

    fn engine(&self) -> Result<Engine, RunnerError> {
        self.engine.parse()
    }

    fn oma_scheme(&self) -> Result<OmaScheme, RunnerError> {
        self.oma_scheme.parse().map_err(validation)
    }
}

fn emit(ds: &Dataset, out: &Option<PathBuf>) -> Result<(), RunnerError> {
    let errors = ds.rows.iter().filter(|r| r.error.is_some()).count();
    if errors > 0 {
        log::warn!("{errors} of {} rows carry errors", ds.rows.len());
    }
    match out {
        Some(path) => {
            ds.save(path)?;
            eprintln!("wrote {} rows to {}", ds.rows.len(), path.display());
            Ok(())
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            ds.write_to(&mut stdout)?;
            stdout.flush().map_err(|e| RunnerError::Io {
                path: "<stdout>".into(),
                source: e,
            })
        }
    }
}

fn run(cli: Cli) -> Result<i32, RunnerError> {
    match cli.command {
        Command::Sweep {
            run,
            start,
            stop,
            step,
            metrics,
        } => {
            let engine = run.engine()?;
            let names: Vec<String> = if metrics.is_empty() {
                DEFAULT_METRICS.iter().map(|s| s.to_string()).collect()
            } else {
                metrics
            };
            let metrics = names
                .iter()
                .map(|m| MetricSpec::parse(m, engine))
                .collect::<Result<Vec<_>, _>>()?;
            let spec = SweepSpec {
                series: vec![Series::base(metrics)],
                mc_trials: run.trials,
                seed: run.seed,
                quad_order: run.quad_order,
                oma_scheme: run.oma_scheme()?,
                output_path: run.out.clone(),
                ..SweepSpec::new(Vec::new())
            }
            .with_grid(start, stop, step);
            emit(&run_sweep(&spec, &run.config()?)?, &run.out)?;
            Ok(0)
        }
        Command::Preset {
            fig_id,
            run,
            omega_i_list,
        } => {
            let preset: FigurePreset = fig_id.parse()?;
            let omega_i_list = omega_i_list.unwrap_or_else(|| DEFAULT_OMEGA_I_LIST.to_vec());
            if omega_i_list.is_empty() || omega_i_list.iter().any(|w| !(*w > 0.0)) {
                return Err(validation("--omega-i-list needs positive values"));
            }
            let opts = PresetOptions {
                trials: run.trials,
                seed: run.seed,
                engine: run.engine()?,
                quad_order: run.quad_order,
                oma_scheme: run.oma_scheme()?,
                omega_i_list,
            };
            let mut spec = preset.sweep(&opts);
            spec.output_path = run.out.clone();
            emit(&run_sweep(&spec, &run.config()?)?, &run.out)?;
            Ok(0)
        }
        Command::Compare { dataset } => {
            let report = compare_report(&Dataset::load(&dataset)?);
            println!("{report}");
            Ok(report.exit_code())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
