use std::io::{Read, Write};
use std::path::PathBuf;

use clap::Args;
use serde::Serialize;
use topocard::topology::SpaceJson;
use topocard::{FiniteSpace, SpaceClassification};

use crate::{open_output, CliError, CliResult, OutputArgs};

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Read the space from this file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Serialize)]
struct Classification {
    n: usize,
    #[serde(flatten)]
    flags: SpaceClassification,
    point_closure_sizes: Vec<usize>,
}

pub fn run(args: ClassifyArgs) -> CliResult {
    let mut text = String::new();
    match &args.input {
        Some(p) => {
            text = std::fs::read_to_string(p)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", p.display())))?
        }
        None => {
            std::io::stdin().read_to_string(&mut text)?;
        }
    }
    let raw: SpaceJson = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("malformed space JSON: {e}")))?;
    let space =
        FiniteSpace::validate(raw.n, &raw.opens).map_err(|e| CliError::usage(e.to_string()))?;
    let report = Classification {
        n: space.n(),
        flags: space.classify(),
        point_closure_sizes: space.point_closure_sizes(),
    };
    let mut out = open_output(args.out.output.as_deref())?;
    serde_json::to_writer(&mut out, &report).map_err(|e| CliError::internal(e.to_string()))?;
    writeln!(out)?;
    out.flush()?;
    Ok(0)
}
