//! `topocard`: enumerate finite topologies, classify a space, evaluate a
//! cardinality estimate, or verify estimates exhaustively.
//!
//! Exit codes: 0 success, 1 internal error, 2 usage or input error,
//! 3 estimator hypothesis failure, 4 containment violation under
//! `verify --expect-containment`.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod classify;
mod enumerate;
mod estimate;
mod verify;

pub const EXIT_INTERNAL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_ESTIMATE: u8 = 3;
pub const EXIT_VIOLATION: u8 = 4;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "TOPOCARD_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "topocard",
    version,
    about = "Cardinality estimates in finite topological spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every labeled topology on n points as newline-delimited JSON.
    Enumerate(enumerate::EnumerateArgs),
    /// Classify a space read as JSON from stdin (or --input).
    Classify(classify::ClassifyArgs),
    /// Evaluate one estimator on the given hypothesis values.
    Estimate(estimate::EstimateArgs),
    /// Sweep enumerated spaces and set configurations against the estimators.
    Verify(verify::VerifyArgs),
    /// Merge partial verification reports written by sharded runs.
    Merge(verify::MergeArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Failure carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::internal(format!("I/O error: {e}"))
    }
}

pub type CliResult = Result<u8, CliError>;

pub fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| {
            CliError::internal(format!("cannot create {}: {e}", p.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        CliError::usage(format!(
            "{THREADS_ENV} must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::internal(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Enumerate(args) => enumerate::run(args),
        Command::Classify(args) => classify::run(args),
        Command::Estimate(args) => estimate::run(args),
        Command::Verify(args) => verify::run(args),
        Command::Merge(args) => verify::merge(args),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
