use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use ccorr_core::harness::{
    demo_report, emit_results, kernel_surface, run_sweep_logged, threads_from_env, write_results, AggregateRow,
    OutputFormat, SweepConfig,
};
use ccorr_core::properties::{run_property_suite, SuiteOptions};
use clap::{Args, Parser, Subcommand};

/// Complex correntropy estimators and the alpha-stable equalization benchmark.
#[derive(Parser)]
#[command(name = "ccorr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monte-Carlo BER sweep over every configured algorithm, alpha and GSNR.
    Sweep {
        #[command(flatten)]
        run: RunArgs,
        /// Use 100000 trials instead of the configured count.
        #[arg(long)]
        full: bool,
    },
    /// MCCC BER over a kernel-size × GSNR grid, written as long-form rows.
    Surface {
        #[command(flatten)]
        run: RunArgs,
        /// Kernel sizes, comma separated; overrides `surface.sigma`.
        #[arg(long, value_delimiter = ',')]
        sigma: Option<Vec<f64>>,
    },
    /// Numeric checks of the estimator properties; exits 1 if any fails.
    ValidateProperties {
        #[arg(long, default_value_t = SuiteOptions::default().seed)]
        seed: u64,
        /// Random datasets per exact-identity check.
        #[arg(long, default_value_t = SuiteOptions::default().datasets)]
        datasets: usize,
    },
    /// One trial traced through source, channel, noise and equalizer output.
    Demo {
        /// Optional config; defaults are used without one.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Defaults to the first configured alpha.
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = 15.0)]
        gsnr: f64,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    config: PathBuf,
    /// Overrides the configured trial count.
    #[arg(long)]
    trials: Option<usize>,
    /// Result file; overrides `output.path`. Without either, rows go to stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// `csv` or `json`; overrides `output.format`.
    #[arg(long)]
    format: Option<OutputFormat>,
}

impl RunArgs {
    fn load(&self) -> ccorr_core::Result<SweepConfig> {
        let mut cfg = SweepConfig::from_path(&self.config)?;
        if let Some(trials) = self.trials {
            cfg.trials = trials;
        }
        if let Some(path) = &self.output {
            cfg.output_path = Some(path.clone());
        }
        if let Some(format) = self.format {
            cfg.output_format = format;
        }
        Ok(cfg)
    }
}

enum Failure {
    Validation,
    Runtime(ccorr_core::Error),
}

impl From<ccorr_core::Error> for Failure {
    fn from(e: ccorr_core::Error) -> Self {
        Failure::Runtime(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation) => ExitCode::from(1),
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Sweep { run, full } => {
            let mut cfg = run.load()?;
            if full {
                cfg.trials = SweepConfig::FULL_TRIALS;
            }
            let outcome = run_sweep_logged(&cfg, threads_from_env()?)?;
            emit(&cfg, &outcome.rows)
        }
        Command::Surface { run, sigma } => {
            let mut cfg = run.load()?;
            if let Some(sigma) = sigma {
                cfg.surface_sigmas = sigma;
                cfg.validate()?;
            }
            let (_, rows) = kernel_surface(&cfg, &cfg.surface_sigmas, &cfg.gsnr_db, threads_from_env()?)?;
            emit(&cfg, &rows)
        }
        Command::ValidateProperties { seed, datasets } => {
            let opts = SuiteOptions {
                seed,
                datasets,
                ..SuiteOptions::default()
            };
            let checks = run_property_suite(&opts);
            for check in &checks {
                println!("{check}");
            }
            if checks.iter().all(|c| c.passed) {
                Ok(())
            } else {
                Err(Failure::Validation)
            }
        }
        Command::Demo {
            config,
            seed,
            alpha,
            gsnr,
        } => {
            let cfg = match config {
                Some(path) => SweepConfig::from_path(&path)?,
                None => SweepConfig::default(),
            };
            let alpha = alpha.unwrap_or(cfg.alpha[0]);
            print!("{}", demo_report(&cfg, alpha, gsnr, seed)?);
            Ok(())
        }
    }
}

fn emit(cfg: &SweepConfig, rows: &[AggregateRow]) -> Result<(), Failure> {
    match &cfg.output_path {
        Some(path) => emit_results(rows, cfg.output_format, path)?,
        None => {
            let stdout = std::io::stdout().lock();
            write_results(rows, cfg.output_format, stdout)?;
        }
    }
    std::io::stdout().flush().map_err(|source| ccorr_core::Error::Io {
        path: "<stdout>".into(),
        source,
    })?;
    Ok(())
}
