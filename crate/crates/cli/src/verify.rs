use std::io::{BufReader, Write};
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use rayon::prelude::*;
use topocard::verifier::{
    effective_reading, merge_reports, planned_runs, write_csv_summary, DEFAULT_COUNTEREXAMPLE_CAP,
};
use topocard::{
    verify_theorem_parallel, verify_theorem_shard, Reading, Shard, TheoremId, VerificationReport,
};

use crate::{open_output, CliError, CliResult, OutputArgs, EXIT_VIOLATION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReadingArg {
    /// Space is not T1.
    Literal,
    /// No singleton is closed.
    Pointwise,
    Both,
}

impl ReadingArg {
    fn readings(self) -> Vec<Reading> {
        match self {
            ReadingArg::Literal => vec![Reading::LiteralNonT1],
            ReadingArg::Pointwise => vec![Reading::PointwiseNonT1],
            ReadingArg::Both => Reading::NON_T1.to_vec(),
        }
    }
}

#[derive(Debug, Args)]
pub struct ReportOutput {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Also write the CSV summary to this file.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Verify a single estimator.
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    theorem: Option<TheoremId>,
    /// Verify every estimator for n = 1..=n-max.
    #[arg(long, requires = "n_max")]
    all: bool,
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    n: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Reading of the non-T1 hypothesis; ignored by estimators without one.
    #[arg(long, value_enum, default_value = "both")]
    reading: ReadingArg,
    /// Counterexamples kept per report.
    #[arg(long = "cap", default_value_t = DEFAULT_COUNTEREXAMPLE_CAP)]
    counterexample_cap: usize,
    /// Split each run into this many shards.
    #[arg(long, default_value_t = 1)]
    shards: usize,
    /// Run only this shard and emit a partial report for `merge`.
    #[arg(long)]
    shard_index: Option<usize>,
    /// Exit 4 when any case falls outside its predicted interval.
    #[arg(long)]
    expect_containment: bool,
    #[command(flatten)]
    report: ReportOutput,
}

#[derive(Debug, Args)]
pub struct MergeArgs {
    /// JSON report files written by `verify --format json`.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    #[command(flatten)]
    report: ReportOutput,
}

fn runs(args: &VerifyArgs) -> Result<Vec<(TheoremId, usize, Reading)>, CliError> {
    let readings = args.reading.readings();
    if args.all {
        let n_max = args.n_max.expect("clap enforces --n-max with --all");
        if n_max == 0 {
            return Err(CliError::usage("--n-max must be at least 1"));
        }
        return Ok(planned_runs(n_max, &readings));
    }
    let theorem = args.theorem.expect("clap enforces --theorem");
    let n = args.n.expect("clap enforces --n");
    let mut runs: Vec<_> = readings
        .into_iter()
        .map(|r| effective_reading(theorem, r).map(|r| (theorem, n, r)))
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::usage(e.to_string()))?;
    runs.dedup();
    Ok(runs)
}

pub fn run(args: VerifyArgs) -> CliResult {
    let shard = match args.shard_index {
        Some(index) => {
            Some(Shard::new(index, args.shards).map_err(|e| CliError::usage(e.to_string()))?)
        }
        None if args.shards == 0 => return Err(CliError::usage("--shards must be at least 1")),
        None => None,
    };
    let reports = runs(&args)?
        .into_par_iter()
        .map(|(t, n, r)| match shard {
            Some(s) => verify_theorem_shard(t, n, r, args.counterexample_cap, s),
            None => verify_theorem_parallel(t, n, r, args.counterexample_cap, args.shards),
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::usage(e.to_string()))?;
    emit(&reports, &args.report)?;
    if args.expect_containment && reports.iter().any(|r| !r.fully_contained()) {
        return Ok(EXIT_VIOLATION);
    }
    Ok(0)
}

pub fn merge(args: MergeArgs) -> CliResult {
    let mut groups: Vec<Vec<VerificationReport>> = Vec::new();
    for path in &args.inputs {
        let file = std::fs::File::open(path)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
        let reports: Vec<VerificationReport> = serde_json::from_reader(BufReader::new(file))
            .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
        for r in reports {
            let id = (r.theorem_id, r.n, r.hypothesis_reading);
            match groups
                .iter_mut()
                .find(|g| (g[0].theorem_id, g[0].n, g[0].hypothesis_reading) == id)
            {
                Some(g) => g.push(r),
                None => groups.push(vec![r]),
            }
        }
    }
    let merged = groups
        .into_iter()
        .map(|g| merge_reports(g).map(|r| r.expect("groups are nonempty")))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::usage(e.to_string()))?;
    emit(&merged, &args.report)?;
    Ok(0)
}

fn emit(reports: &[VerificationReport], opts: &ReportOutput) -> Result<(), CliError> {
    let mut out = open_output(opts.out.output.as_deref())?;
    match opts.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, reports)
                .map_err(|e| CliError::internal(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            write_csv_summary(reports, &mut out).map_err(|e| CliError::internal(e.to_string()))?
        }
    }
    out.flush()?;
    if let Some(path) = &opts.csv {
        let file = open_output(Some(path))?;
        write_csv_summary(reports, file).map_err(|e| CliError::internal(e.to_string()))?;
    }
    // keep stdout machine-readable when the data itself goes there
    let summaries: Vec<String> = reports.iter().map(|r| r.summary_line()).collect();
    if opts.out.output.is_some() {
        let mut stdout = std::io::stdout().lock();
        for line in &summaries {
            writeln!(stdout, "{line}")?;
        }
    } else {
        for line in &summaries {
            eprintln!("{line}");
        }
    }
    Ok(())
}
