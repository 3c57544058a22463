use std::io::Write;

use clap::Args;
use serde::Serialize;
use topocard::estimators::*;
use topocard::{Hypothesis, NatInterval, TheoremId};

use crate::{open_output, CliError, CliResult, OutputArgs, EXIT_ESTIMATE};

/// `lo,hi` or a bare scalar `k` meaning `[k, k]`.
pub fn parse_interval(s: &str) -> Result<NatInterval, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|e| format!("{t:?} is not a nonnegative integer: {e}"))
    };
    match s.split_once(',') {
        Some((lo, hi)) => NatInterval::new(parse(lo)?, parse(hi)?).map_err(|e| e.to_string()),
        None => Ok(NatInterval::from_scalar(parse(s)?)),
    }
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    /// Estimator id: thm2.1, thm2.2, thm2.3, thm3.1, thm3.2, thm3.3, thm3.4, thm3.5.
    #[arg(long)]
    theorem: TheoremId,
    /// Carrier cardinality.
    #[arg(long)]
    n: Option<u64>,
    /// Exact card(A) for thm3.1.
    #[arg(long)]
    m: Option<u64>,
    /// Exact card(A) for thm3.2.
    #[arg(long)]
    p: Option<u64>,
    /// Witness open size for thm3.3.
    #[arg(long)]
    k: Option<u64>,
    /// Closure caps k_x for the points outside A (thm3.2), comma separated.
    #[arg(long = "k-x", value_delimiter = ',')]
    k_x: Vec<u64>,
    /// Bounds on card(X) as `m,n` (defaults to `[n, n]` when --n is given).
    #[arg(long, value_parser = parse_interval)]
    x: Option<NatInterval>,
    #[arg(long, value_parser = parse_interval)]
    a: Option<NatInterval>,
    #[arg(long, value_parser = parse_interval)]
    b: Option<NatInterval>,
    #[arg(long, value_parser = parse_interval)]
    c: Option<NatInterval>,
    #[command(flatten)]
    out: OutputArgs,
}

fn need<T>(value: Option<T>, flag: &str, theorem: TheoremId) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::usage(format!("{theorem} requires --{flag}")))
}

impl EstimateArgs {
    fn carrier_bounds(&self) -> Result<NatInterval, CliError> {
        match (self.x, self.n) {
            (Some(x), _) => Ok(x),
            (None, Some(n)) => Ok(NatInterval::from_scalar(n)),
            (None, None) => Err(CliError::usage(format!(
                "{} requires --x or --n",
                self.theorem
            ))),
        }
    }

    fn hypothesis(&self) -> Result<Hypothesis, CliError> {
        let t = self.theorem;
        Ok(match t {
            TheoremId::Superset => Hypothesis::Superset(SupersetHypothesis {
                n: need(self.n, "n", t)?,
                a: need(self.a, "a", t)?,
            }),
            TheoremId::Factor => Hypothesis::Factor(ProductHypothesis {
                c: need(self.c, "c", t)?,
                a: need(self.a, "a", t)?,
            }),
            TheoremId::Intersection | TheoremId::HyperconnectedIntersection => {
                let h = UnionSplitHypothesis {
                    x: self.carrier_bounds()?,
                    a: need(self.a, "a", t)?,
                    b: need(self.b, "b", t)?,
                };
                if t == TheoremId::Intersection {
                    Hypothesis::Intersection(h)
                } else {
                    Hypothesis::HyperconnectedIntersection(h)
                }
            }
            TheoremId::Closure => Hypothesis::Closure(ClosureHypothesis {
                n: need(self.n, "n", t)?,
                m: need(self.m, "m", t)?,
            }),
            TheoremId::Interior => {
                let p = need(self.p, "p", t)?;
                // caps are attached to the outside points p, p+1, ...
                let k_bounds = self
                    .k_x
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| (p as usize + i, k))
                    .collect();
                Hypothesis::Interior(InteriorHypothesis {
                    n: need(self.n, "n", t)?,
                    p,
                    k_bounds,
                })
            }
            TheoremId::SemiOpen => Hypothesis::SemiOpen(SemiOpenHypothesis {
                n: need(self.n, "n", t)?,
                k: need(self.k, "k", t)?,
            }),
            TheoremId::EdUnionClosure => Hypothesis::EdUnionClosure(EdUnionHypothesis {
                x: self.carrier_bounds()?,
                a: need(self.a, "a", t)?,
                b: need(self.b, "b", t)?,
            }),
        })
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum EstimateOutput {
    Interval {
        theorem: TheoremId,
        interval: NatInterval,
    },
    Error {
        theorem: TheoremId,
        error: &'static str,
        detail: String,
    },
}

pub fn run(args: EstimateArgs) -> CliResult {
    let hypothesis = args.hypothesis()?;
    let theorem = hypothesis.theorem();
    let (body, code) = match hypothesis.estimate() {
        Ok(interval) => (EstimateOutput::Interval { theorem, interval }, 0),
        Err(e) => {
            eprintln!("{theorem}: {e}");
            let body = EstimateOutput::Error {
                theorem,
                error: e.kind(),
                detail: e.to_string(),
            };
            (body, EXIT_ESTIMATE)
        }
    };
    let mut out = open_output(args.out.output.as_deref())?;
    let text = serde_json::to_string(&body).map_err(|e| CliError::internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    out.flush()?;
    Ok(code)
}
