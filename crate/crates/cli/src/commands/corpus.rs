use std::path::PathBuf;

use anyhow::Context;
use clap::Subcommand;
use serde::Serialize;
use strongprops_core::constructs::{load_corpus, CorpusFile, CORPUS_SCHEMA_VERSION};
use strongprops_core::{Certificate, Error};

use crate::input::corpus;
use crate::output::{Outcome, Run};

#[derive(Subcommand)]
pub enum CorpusCommand {
    /// List the certificate ids with their orders and claims.
    List,
    /// Print one certificate.
    Show { id: String },
    /// Print the whole corpus as a corpus file.
    Export,
    /// Load a corpus file and verify every claim.
    Check { file: PathBuf },
}

#[derive(Serialize)]
struct Entry {
    id: String,
    n: usize,
    edges: usize,
    claims: Vec<String>,
}

#[derive(Serialize)]
struct CheckBody {
    file: String,
    certificates: usize,
    failure: Option<String>,
}

pub fn run(cmd: &CorpusCommand) -> anyhow::Result<Run> {
    match cmd {
        CorpusCommand::List => {
            let entries: Vec<Entry> = corpus()?
                .iter()
                .map(|c| Entry {
                    id: c.id.clone(),
                    n: c.n(),
                    edges: c.graph.edge_count(),
                    claims: c.claims.iter().map(|cl| cl.label()).collect(),
                })
                .collect();
            let width = entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
            let text = entries
                .iter()
                .map(|e| format!("{:<width$}  n = {:<2} |E| = {:<3} {}\n", e.id, e.n, e.edges, e.claims.join(", ")))
                .collect();
            Run::new("corpus", Outcome::Proved, entries, text)
        }
        CorpusCommand::Show { id } => {
            let c: Certificate = corpus()?
                .into_iter()
                .find(|c| &c.id == id)
                .with_context(|| format!("no certificate `{id}` in the corpus"))?;
            let text = serde_json::to_string_pretty(&c)? + "\n";
            Run::new("corpus", Outcome::Proved, c, text)
        }
        CorpusCommand::Export => {
            let file = CorpusFile { schema_version: CORPUS_SCHEMA_VERSION, certificates: corpus()? };
            let text = serde_json::to_string_pretty(&file)? + "\n";
            Run::new("corpus", Outcome::Proved, file, text)
        }
        CorpusCommand::Check { file } => {
            let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
            let name = file.display().to_string();
            match load_corpus(&text) {
                Ok(certs) => {
                    let out = format!("{name}: {} certificates, every claim verified\n", certs.len());
                    let body = CheckBody { file: name, certificates: certs.len(), failure: None };
                    Run::new("corpus", Outcome::Proved, body, out)
                }
                Err(e @ Error::CorpusIntegrity { .. }) => {
                    let out = format!("{name}: {e}\n");
                    let body = CheckBody { file: name, certificates: 0, failure: Some(e.to_string()) };
                    Run::new("corpus", Outcome::Refuted, body, out)
                }
                Err(e) => Err(anyhow::Error::new(e).context(format!("loading {name}"))),
            }
        }
    }
}
