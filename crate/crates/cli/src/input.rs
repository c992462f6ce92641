use std::path::Path;

use anyhow::{bail, Context};
use strongprops_core::constructs::{corpus as embedded_corpus, load_corpus};
use strongprops_core::matgraph::{parse_graph, pattern_of};
use strongprops_core::{Certificate, Graph, GraphFormat, SymMatrix, DEFAULT_FLOAT_TOL};

/// Overrides the embedded corpus with a corpus file.
pub const CORPUS_ENV: &str = "STRONGPROPS_CORPUS";

pub fn corpus() -> anyhow::Result<Vec<Certificate>> {
    match std::env::var_os(CORPUS_ENV) {
        Some(path) => {
            let path = Path::new(&path);
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading corpus {} (from {CORPUS_ENV})", path.display()))?;
            load_corpus(&text).with_context(|| format!("loading corpus {}", path.display()))
        }
        None => Ok(embedded_corpus()?),
    }
}

pub fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let bytes = std::fs::read(path).with_context(|| format!("reading graph {}", path.display()))?;
    parse_graph(&bytes, GraphFormat::from_path(path)).with_context(|| format!("parsing graph {}", path.display()))
}

/// `corpus:<id>` or the path of a certificate JSON file.
pub fn read_certificate(locator: &str) -> anyhow::Result<Certificate> {
    if let Some(id) = locator.strip_prefix("corpus:") {
        return corpus()?
            .into_iter()
            .find(|c| c.id == id)
            .with_context(|| format!("no certificate `{id}` in the corpus"));
    }
    let text = std::fs::read_to_string(locator).with_context(|| format!("reading certificate {locator}"))?;
    serde_json::from_str(&text).with_context(|| format!("parsing certificate {locator}"))
}

/// A matrix with its graph and a label for reports.
pub struct MatrixInput {
    pub source: String,
    pub matrix: SymMatrix,
    pub graph: Graph,
}

/// Reads `--cert` or `--matrix` (with an optional `--graph`; the pattern of
/// the matrix otherwise).
pub fn read_matrix_input(cert: Option<&str>, matrix: Option<&Path>, graph: Option<&Path>) -> anyhow::Result<MatrixInput> {
    let (source, matrix, own_graph) = match (cert, matrix) {
        (Some(locator), None) => {
            let c = read_certificate(locator)?;
            (locator.to_string(), c.sym(), Some(c.graph))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading matrix {}", path.display()))?;
            let m: SymMatrix =
                serde_json::from_str(&text).with_context(|| format!("parsing matrix {}", path.display()))?;
            (path.display().to_string(), m, None)
        }
        (None, None) => bail!("one of --cert or --matrix is required"),
        (Some(_), Some(_)) => bail!("--cert and --matrix are mutually exclusive"),
    };
    let graph = match graph {
        Some(path) => read_graph(path)?,
        None => own_graph.unwrap_or_else(|| pattern_of(&matrix, DEFAULT_FLOAT_TOL)),
    };
    Ok(MatrixInput { source, matrix, graph })
}
