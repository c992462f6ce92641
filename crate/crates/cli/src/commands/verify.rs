use std::path::PathBuf;

use anyhow::bail;
use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use strongprops_core::strongprops::{verify, witness_satisfies, StrongPropertyReport, VerifyOptions};
use strongprops_core::{Graph, Mode, Property, SymMatrix};

use crate::input::read_matrix_input;
use crate::output::{matrix_rows, Certainty, Outcome, Run, MIN_FLOAT_MARGIN};

#[derive(Args)]
pub struct VerifyArgs {
    /// sap, ssp or smp.
    #[arg(long, required_unless_present = "recheck")]
    property: Option<Property>,
    /// `corpus:<id>` or a certificate JSON file.
    #[arg(long, conflicts_with = "matrix")]
    cert: Option<String>,
    /// Matrix JSON file (`{"mode", "n", "entries"}`).
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Graph file; defaults to the certificate graph or the matrix pattern.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Arithmetic; defaults to that of the input.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Relative rank tolerance in float mode.
    #[arg(long)]
    tol: Option<f64>,
    /// Re-check a saved JSON report of any command.
    #[arg(long, conflicts_with_all = ["property", "cert", "matrix", "graph", "mode", "tol"])]
    recheck: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Float,
}

#[derive(Serialize, Deserialize)]
pub struct VerifyBody {
    pub source: String,
    pub property: Property,
    pub graph: Graph,
    pub matrix: SymMatrix,
    pub rank_tol: f64,
    pub certainty: Certainty,
    pub report: StrongPropertyReport,
}

pub fn run(args: &VerifyArgs) -> anyhow::Result<Run> {
    if let Some(path) = &args.recheck {
        return super::recheck::run(path);
    }
    let property = args.property.expect("clap enforces --property");
    let input = read_matrix_input(args.cert.as_deref(), args.matrix.as_deref(), args.graph.as_deref())?;
    let matrix = match (args.mode, input.matrix.mode()) {
        (Some(ModeArg::Exact), Mode::Float) => {
            bail!("exact mode needs exact entries, but {} holds floating-point entries", input.source)
        }
        (Some(ModeArg::Float), Mode::Exact) => input.matrix.as_float(),
        _ => input.matrix,
    };
    let opts = options(args.tol)?;
    let report = verify(property, &matrix, &input.graph, &opts)?;
    let body = VerifyBody {
        source: input.source,
        property,
        graph: input.graph,
        certainty: certainty(&matrix),
        matrix,
        rank_tol: opts.rank_tol,
        report,
    };
    let outcome = outcome(&body.report, body.certainty);
    let text = render(&body, outcome);
    Run::new("verify", outcome, body, text)
}

fn options(tol: Option<f64>) -> anyhow::Result<VerifyOptions> {
    let mut opts = VerifyOptions::default();
    if let Some(t) = tol {
        if !(t > 0.0 && t < 1.0) {
            bail!("--tol must lie in (0, 1), got {t}");
        }
        opts.rank_tol = t;
    }
    Ok(opts)
}

fn certainty(m: &SymMatrix) -> Certainty {
    match m.mode() {
        Mode::Exact => Certainty::Exact,
        Mode::Float => Certainty::Numerical,
    }
}

fn outcome(r: &StrongPropertyReport, certainty: Certainty) -> Outcome {
    if certainty == Certainty::Numerical && (r.advisory || r.margin.unwrap_or(0.0) < MIN_FLOAT_MARGIN) {
        return Outcome::Inconclusive;
    }
    Outcome::from_verdict(r.verdict)
}

fn render(body: &VerifyBody, outcome: Outcome) -> String {
    let r = &body.report;
    let word = match (outcome, body.certainty) {
        (Outcome::Inconclusive, _) => "is undecided",
        (Outcome::Proved, Certainty::Exact) => "holds",
        (Outcome::Refuted, Certainty::Exact) => "fails",
        (Outcome::Proved, Certainty::Numerical) => "holds (numerically indicated)",
        (Outcome::Refuted, Certainty::Numerical) => "fails (numerically indicated)",
    };
    let mut s = format!(
        "{} {word} for {}: rank {} of {} non-edge constraints",
        body.property, body.source, r.rank, r.p
    );
    if let Some(m) = r.margin {
        s.push_str(&format!(", margin {m:.3e}"));
    }
    if r.advisory {
        s.push_str(", eigenvalue clustering is poorly separated");
    }
    s.push('\n');
    if let Some(w) = &r.witness {
        s.push_str("witness X:\n");
        s.push_str(&matrix_rows(w));
    }
    s
}

pub fn recheck(body: Value) -> anyhow::Result<Run> {
    let saved: VerifyBody = serde_json::from_value(body)?;
    let opts = VerifyOptions { rank_tol: saved.rank_tol, ..VerifyOptions::default() };
    let fresh = verify(saved.property, &saved.matrix, &saved.graph, &opts)?;
    let mut problems = Vec::new();
    if fresh.verdict != saved.report.verdict || fresh.rank != saved.report.rank {
        problems.push(format!(
            "recorded verdict {} with rank {}, recomputed {} with rank {}",
            saved.report.verdict, saved.report.rank, fresh.verdict, fresh.rank
        ));
    }
    if let (Some(a), Some(w)) = (saved.matrix.as_exact(), saved.report.witness.as_ref().and_then(|w| w.as_exact())) {
        if !witness_satisfies(a, &saved.graph, saved.property, w) {
            problems.push("recorded witness does not satisfy its system".into());
        }
    }
    let outcome = if !problems.is_empty() {
        Outcome::Refuted
    } else {
        match outcome(&fresh, saved.certainty) {
            Outcome::Inconclusive => Outcome::Inconclusive,
            _ => Outcome::Proved,
        }
    };
    super::recheck::finish("verify", outcome, problems, &format!("{} for {}", saved.property, saved.source))
}
