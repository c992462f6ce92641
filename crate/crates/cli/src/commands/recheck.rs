use std::path::Path;

use serde::Serialize;

use crate::output::{read_envelope, Outcome, Run};

#[derive(Serialize)]
struct RecheckBody<'a> {
    report_command: &'a str,
    subject: &'a str,
    reproduced: bool,
    problems: &'a [String],
}

pub fn run(path: &Path) -> anyhow::Result<Run> {
    let env = read_envelope(path)?;
    match env.command.as_str() {
        "verify" => super::verify::recheck(env.body),
        "bounds" => super::bounds::recheck(env.body),
        "classify" => super::classify::recheck(env.body),
        "lift" => super::lift::recheck(env.body),
        "gersh" => super::gersh::recheck(env.body),
        other => anyhow::bail!("reports of `{other}` cannot be re-checked"),
    }
}

/// Builds the re-check report from the problems found.
pub fn finish(command: &str, outcome: Outcome, problems: Vec<String>, subject: &str) -> anyhow::Result<Run> {
    let mut text = match outcome {
        Outcome::Proved => format!("{command} report for {subject} reproduced\n"),
        Outcome::Inconclusive => format!("{command} report for {subject} reproduced, but only with a low float margin\n"),
        Outcome::Refuted => format!("{command} report for {subject} does not reproduce\n"),
    };
    for p in &problems {
        text.push_str(&format!("  {p}\n"));
    }
    let body = RecheckBody { report_command: command, subject, reproduced: problems.is_empty(), problems: &problems };
    Run::new("recheck", outcome, body, text)
}
