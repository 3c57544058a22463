use std::io::Write;

use clap::Args;
use topocard::{enumerate_spaces, EnumerationFilter};

use crate::{open_output, CliError, CliResult, OutputArgs};

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Carrier size, 1..=5.
    #[arg(long)]
    n: usize,
    /// Keep only spaces that are not T1.
    #[arg(long)]
    non_t1: bool,
    /// Keep only spaces in which no singleton is closed.
    #[arg(long)]
    pointwise_non_t1: bool,
    /// Keep only extremally disconnected spaces.
    #[arg(long)]
    ed: bool,
    #[arg(long)]
    hyperconnected: bool,
    #[arg(long)]
    t0: bool,
    #[command(flatten)]
    out: OutputArgs,
}

pub fn run(args: EnumerateArgs) -> CliResult {
    let filter = EnumerationFilter {
        require_non_t1: args.non_t1,
        require_pointwise_non_t1: args.pointwise_non_t1,
        require_ed: args.ed,
        require_hyperconnected: args.hyperconnected,
        require_t0: args.t0,
    };
    let spaces = enumerate_spaces(args.n, filter).map_err(|e| CliError::usage(e.to_string()))?;
    let mut out = open_output(args.out.output.as_deref())?;
    for space in spaces {
        writeln!(out, "{}", space.to_json())?;
    }
    out.flush()?;
    Ok(0)
}
