use std::path::PathBuf;

use clap::Args;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use strongprops_core::strongprops::{gershgorin_ssp, GershgorinOutcome, GershgorinReport};
use strongprops_core::SymMatrix;

use crate::input::read_matrix_input;
use crate::output::{Outcome, Run};

#[derive(Args)]
pub struct GershArgs {
    /// `corpus:<id>` or a certificate JSON file.
    #[arg(long, conflicts_with = "matrix")]
    cert: Option<String>,
    /// Matrix JSON file.
    #[arg(long)]
    matrix: Option<PathBuf>,
}

#[derive(Serialize, Deserialize)]
pub struct GershBody {
    pub source: String,
    pub matrix: SymMatrix,
    pub report: GershgorinReport,
}

fn outcome(r: &GershgorinReport) -> Outcome {
    match r.outcome {
        GershgorinOutcome::ProvedSsp => Outcome::Proved,
        GershgorinOutcome::Inconclusive => Outcome::Inconclusive,
    }
}

pub fn run(args: &GershArgs) -> anyhow::Result<Run> {
    let input = read_matrix_input(args.cert.as_deref(), args.matrix.as_deref(), None)?;
    let report = gershgorin_ssp(&input.matrix);
    let extra: Vec<String> = report
        .intersection_graph
        .edges()
        .into_iter()
        .filter(|&(i, j)| !report.pattern.has_edge(i, j))
        .map(|(i, j)| format!("{}-{}", i + 1, j + 1))
        .collect();
    let text = match report.outcome {
        GershgorinOutcome::ProvedSsp => format!("SSP proved for {}: every pair of intersecting discs is an edge\n", input.source),
        GershgorinOutcome::Inconclusive => format!(
            "inconclusive for {}: discs intersect on the non-edges {}\n",
            input.source,
            extra.join(" ")
        ),
    };
    let outcome = outcome(&report);
    Run::new("gersh", outcome, GershBody { source: input.source, matrix: input.matrix, report }, text)
}

pub fn recheck(body: Value) -> anyhow::Result<Run> {
    let saved: GershBody = serde_json::from_value(body)?;
    let fresh = gershgorin_ssp(&saved.matrix);
    let problems = if fresh == saved.report {
        Vec::new()
    } else {
        vec![format!("recorded {:?}, recomputed {:?}", saved.report.outcome, fresh.outcome)]
    };
    let outcome = if !problems.is_empty() { Outcome::Refuted } else { outcome(&fresh) };
    super::recheck::finish("gersh", outcome, problems, &saved.source)
}
