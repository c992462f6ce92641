use std::io::Write;
use std::path::Path;

use anyhow::Context;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::Format;

/// Version of the JSON report envelope.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

pub const EXIT_USAGE: u8 = 3;

/// Float verdicts below this rank margin are inconclusive.
pub const MIN_FLOAT_MARGIN: f64 = 1e3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Proved,
    Refuted,
    Inconclusive,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Proved => 0,
            Outcome::Refuted => 1,
            Outcome::Inconclusive => 2,
        }
    }

    pub fn from_verdict(v: bool) -> Outcome {
        if v {
            Outcome::Proved
        } else {
            Outcome::Refuted
        }
    }
}

/// How a verdict was reached: exact arithmetic proves, floats indicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certainty {
    Exact,
    Numerical,
}

/// A finished command: the outcome, the JSON body and its text rendering.
pub struct Run {
    pub command: &'static str,
    pub outcome: Outcome,
    pub body: Value,
    pub text: String,
}

impl Run {
    pub fn new(command: &'static str, outcome: Outcome, body: impl Serialize, text: String) -> anyhow::Result<Run> {
        let body = serde_json::to_value(body).context("serializing report")?;
        Ok(Run { command, outcome, body, text })
    }
}

/// The JSON envelope shared by every report.
#[derive(Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: u32,
    pub command: String,
    pub outcome: Outcome,
    pub body: Value,
}

pub fn emit(run: &Run, format: Format, out: Option<&Path>) -> anyhow::Result<u8> {
    let rendered = match format {
        Format::Text => run.text.clone(),
        Format::Json => {
            let env = Envelope {
                schema_version: REPORT_SCHEMA_VERSION,
                command: run.command.to_string(),
                outcome: run.outcome,
                body: run.body.clone(),
            };
            let mut s = serde_json::to_string_pretty(&env)?;
            s.push('\n');
            s
        }
    };
    match out {
        Some(path) => std::fs::write(path, rendered).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(rendered.as_bytes())?,
    }
    Ok(run.outcome.exit_code())
}

pub fn read_envelope(path: &Path) -> anyhow::Result<Envelope> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let env: Envelope = serde_json::from_str(&text).with_context(|| format!("parsing report {}", path.display()))?;
    if env.schema_version != REPORT_SCHEMA_VERSION {
        anyhow::bail!(
            "report schema_version {} is not supported (expected {REPORT_SCHEMA_VERSION})",
            env.schema_version
        );
    }
    Ok(env)
}

/// Renders a matrix one row per line.
pub fn matrix_rows(m: &strongprops_core::SymMatrix) -> String {
    let n = m.n();
    let cells: Vec<String> = match m {
        strongprops_core::SymMatrix::Exact(a) => a.entries().iter().map(|x| x.to_string()).collect(),
        strongprops_core::SymMatrix::Float(a) => (0..n * n).map(|k| format!("{:.6}", a[(k / n, k % n)])).collect(),
    };
    let width = cells.iter().map(String::len).max().unwrap_or(0);
    cells
        .chunks(n.max(1))
        .map(|row| {
            let row: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            format!("  [{}]\n", row.join(" "))
        })
        .collect()
}
