use std::collections::HashSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::Certificate;
use crate::error::{Error, Result};

pub const CORPUS_SCHEMA_VERSION: u32 = 1;

const EMBEDDED: &str = include_str!("../../data/corpus.json");

/// On-disk corpus: a schema version and a list of certificates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusFile {
    pub schema_version: u32,
    pub certificates: Vec<Certificate>,
}

/// Parses a corpus file and re-verifies every certificate.
pub fn load_corpus(text: &str) -> Result<Vec<Certificate>> {
    let file: CorpusFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        position: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    if file.schema_version != CORPUS_SCHEMA_VERSION {
        return Err(Error::InvalidField(format!(
            "corpus schema_version {} is not supported (expected {CORPUS_SCHEMA_VERSION})",
            file.schema_version
        )));
    }
    let mut seen = HashSet::new();
    for c in &file.certificates {
        if !seen.insert(c.id.as_str()) {
            return Err(Error::CorpusIntegrity { id: c.id.clone(), claim: "duplicate id".into() });
        }
        c.verify()?;
    }
    Ok(file.certificates)
}

/// The embedded corpus, verified once per process.
pub fn corpus() -> Result<Vec<Certificate>> {
    static CACHE: OnceLock<Result<Vec<Certificate>>> = OnceLock::new();
    CACHE.get_or_init(|| load_corpus(EMBEDDED)).clone()
}

pub fn corpus_certificate(id: &str) -> Result<Certificate> {
    corpus()?
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::InvalidField(format!("no corpus certificate `{id}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_corpus_verifies() {
        let all = corpus().unwrap();
        assert_eq!(all.len(), 9);
    }

    #[test]
    fn tampered_claim_fails_loudly() {
        let text = EMBEDDED.replacen("{\"kind\": \"q\", \"value\": 3}", "{\"kind\": \"q\", \"value\": 2}", 1);
        assert_ne!(text, EMBEDDED);
        match load_corpus(&text) {
            Err(Error::CorpusIntegrity { id, claim }) => {
                assert_eq!(id, "exstar");
                assert_eq!(claim, "q = 2");
            }
            other => panic!("expected integrity failure, got {other:?}"),
        }
    }

    #[test]
    fn wrong_version_is_rejected() {
        let text = EMBEDDED.replacen("\"schema_version\": 1", "\"schema_version\": 9", 1);
        assert!(matches!(load_corpus(&text), Err(Error::InvalidField(_))));
    }
}
