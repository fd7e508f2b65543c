//! `vagueset` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 data validation error,
//! 3 internal invariant violation.

mod commands;
mod config;
mod error;
mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Format, Semantics};
use config::Config;
use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "vagueset", version, about = "Vague sets and eventological linguistic variables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Configuration file with `key = value` lines
    #[arg(long)]
    config: Option<PathBuf>,
    /// Lower end of the universe (overrides the config)
    #[arg(long, allow_negative_numbers = true)]
    lo: Option<f64>,
    /// Upper end of the universe (overrides the config)
    #[arg(long, allow_negative_numbers = true)]
    hi: Option<f64>,
    /// Decimal places for floating output
    #[arg(long)]
    precision: Option<usize>,
    /// Write output here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a judgment dataset and summarize it
    Validate {
        #[arg(long)]
        dataset: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate an expression over a dataset
    Eval {
        #[arg(long)]
        dataset: PathBuf,
        #[arg(long)]
        expr: String,
        /// event | vague | tnorm:min | tnorm:prod | tnorm:luk
        #[arg(long, default_value = "event")]
        semantics: Semantics,
        /// Sampling step for CSV output
        #[arg(long)]
        step: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
    /// Compare the Minkowski combination of two atoms against the t-norms
    Compare {
        #[arg(long)]
        dataset: PathBuf,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        step: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
    /// Generate a synthetic age-judgment dataset
    Example {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 71)]
        subjects: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn resolve(common: &Common, step: Option<f64>) -> Result<Config, CliError> {
    let mut cfg = match &common.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(lo) = common.lo {
        cfg.lo = lo;
    }
    if let Some(hi) = common.hi {
        cfg.hi = hi;
    }
    if let Some(p) = common.precision {
        cfg.precision = p;
    }
    if let Some(s) = step {
        cfg.step = s;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| CliError::Internal(format!("cannot write output: {e}")))
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (result, common) = match &cli.command {
        Command::Validate { dataset, common } => {
            let cfg = resolve(common, None)?;
            (commands::validate(dataset, &cfg), common)
        }
        Command::Eval {
            dataset,
            expr,
            semantics,
            step,
            format,
            common,
        } => {
            let cfg = resolve(common, *step)?;
            (commands::eval(dataset, expr, *semantics, *format, &cfg), common)
        }
        Command::Compare {
            dataset,
            expr,
            step,
            format,
            common,
        } => {
            let cfg = resolve(common, *step)?;
            (commands::compare(dataset, expr, *format, &cfg), common)
        }
        Command::Example { seed, subjects, common } => {
            resolve(common, None)?;
            (commands::example(*seed, *subjects), common)
        }
    };
    emit(common.out.as_deref(), &result?)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
