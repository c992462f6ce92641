//! Certificates: a graph, an exact matrix in `S(G)` and claims about it that
//! the toolkit can re-check.

mod builders;
mod corpus;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matgraph::{pattern_of, Graph};
use crate::scalars::{nullspace_basis_exact, ExactMatrix, ExactScalar};
use crate::spectra::{eig_cluster, multiplicity_list, q_exact, DEFAULT_CLUSTER_TOL};
use crate::strongprops::{verify, witness_satisfies, Property, VerifyOptions};
use crate::symmatrix::SymMatrix;

pub use builders::{diag_distinct, direct_sum, flipped_cycle};
pub use corpus::{corpus, corpus_certificate, load_corpus, CorpusFile, CORPUS_SCHEMA_VERSION};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub value: ExactScalar,
    pub multiplicity: usize,
}

/// A machine-checkable statement about a certificate's matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Claim {
    /// `A + shift*I` has (or lacks) `property`. A failing claim may carry a
    /// witness `X`, which must solve the definitional system.
    Property {
        property: Property,
        holds: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        shift: Option<ExactScalar>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<Vec<Vec<ExactScalar>>>,
    },
    Q {
        value: usize,
    },
    /// Exact eigenvalues with multiplicities summing to `n`.
    Spectrum {
        eigenvalues: Vec<Eigenvalue>,
    },
    /// Sorted eigenvalues within `tol` in the max norm.
    SpectrumApprox {
        values: Vec<f64>,
        tol: f64,
    },
    /// Ordered multiplicity list (ascending eigenvalues).
    MultiplicityList {
        m: Vec<usize>,
    },
}

impl Claim {
    /// Short label used in integrity errors.
    pub fn label(&self) -> String {
        match self {
            Claim::Property { property, holds, shift, .. } => {
                let base = if *holds { format!("{property}") } else { format!("not {property}") };
                match shift {
                    Some(s) => format!("{base} (shift {s})"),
                    None => base,
                }
            }
            Claim::Q { value } => format!("q = {value}"),
            Claim::Spectrum { .. } => "spectrum".into(),
            Claim::SpectrumApprox { .. } => "approximate spectrum".into(),
            Claim::MultiplicityList { m } => format!("multiplicity list {m:?}"),
        }
    }
}

/// A graph, an exact matrix whose pattern is the graph, and claims about
/// the matrix.
///
/// JSON: `{id, n, edges, d, entries, claims, provenance}` with 1-based
/// edges and row-major exact entry strings. `d` is the radicand of the
/// entries (0 for rational matrices).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "CertificateRepr", try_from = "CertificateRepr")]
pub struct Certificate {
    pub id: String,
    pub graph: Graph,
    pub matrix: ExactMatrix,
    pub claims: Vec<Claim>,
    pub provenance: String,
}

#[derive(Serialize, Deserialize)]
struct CertificateRepr {
    id: String,
    n: usize,
    edges: Vec<[usize; 2]>,
    d: u64,
    entries: Vec<Vec<ExactScalar>>,
    claims: Vec<Claim>,
    provenance: String,
}

impl From<Certificate> for CertificateRepr {
    fn from(c: Certificate) -> Self {
        let n = c.graph.n();
        CertificateRepr {
            id: c.id,
            n,
            edges: c.graph.edges().into_iter().map(|(i, j)| [i + 1, j + 1]).collect(),
            d: c.matrix.radicand().unwrap_or(0),
            entries: (0..n).map(|i| c.matrix.row(i).to_vec()).collect(),
            claims: c.claims,
            provenance: c.provenance,
        }
    }
}

impl TryFrom<CertificateRepr> for Certificate {
    type Error = Error;

    fn try_from(r: CertificateRepr) -> Result<Self> {
        let edges: Vec<(usize, usize)> = r
            .edges
            .iter()
            .map(|&[i, j]| {
                if i == 0 || j == 0 {
                    Err(Error::parse(format!("certificate `{}`", r.id), "edges are 1-based"))
                } else {
                    Ok((i - 1, j - 1))
                }
            })
            .collect::<Result<_>>()?;
        let graph = Graph::from_edges(r.n, &edges)?;
        if r.entries.len() != r.n || r.entries.iter().any(|row| row.len() != r.n) {
            return Err(Error::Shape(format!("certificate `{}`: entries must be {n}x{n}", r.id, n = r.n)));
        }
        let matrix = ExactMatrix::from_rows(r.entries)?;
        let d = matrix.radicand()?;
        if d != 0 && d != r.d {
            return Err(Error::InvalidField(format!(
                "certificate `{}` declares d = {} but its entries use sqrt({d})",
                r.id, r.d
            )));
        }
        Ok(Certificate {
            id: r.id,
            graph,
            matrix,
            claims: r.claims,
            provenance: r.provenance,
        })
    }
}

fn square_matrix(rows: &[Vec<ExactScalar>], n: usize) -> Option<ExactMatrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return None;
    }
    ExactMatrix::from_rows(rows.to_vec()).ok()
}

impl Certificate {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn sym(&self) -> SymMatrix {
        SymMatrix::Exact(self.matrix.clone())
    }

    /// Value of the first `q` claim, if any.
    pub fn q(&self) -> Option<usize> {
        self.claims.iter().find_map(|c| match c {
            Claim::Q { value } => Some(*value),
            _ => None,
        })
    }

    /// Whether the certificate claims `property` for the unshifted matrix.
    pub fn claims_property(&self, property: Property) -> Option<bool> {
        self.claims.iter().find_map(|c| match c {
            Claim::Property { property: p, holds, shift: None, .. } if *p == property => Some(*holds),
            _ => None,
        })
    }

    /// Re-checks the pattern and every claim in exact arithmetic.
    pub fn verify(&self) -> Result<()> {
        let fail = |claim: String| Error::CorpusIntegrity { id: self.id.clone(), claim };
        if !self.matrix.is_symmetric() || self.matrix.nrows() != self.n() {
            return Err(fail("matrix is not a symmetric matrix of the graph's order".into()));
        }
        if pattern_of(&self.sym(), 0.0) != self.graph {
            return Err(fail("pattern of the matrix differs from the graph".into()));
        }
        for claim in &self.claims {
            match self.check_claim(claim) {
                Ok(true) => {}
                Ok(false) => return Err(fail(claim.label())),
                Err(e) => return Err(fail(format!("{}: {e}", claim.label()))),
            }
        }
        Ok(())
    }

    fn check_claim(&self, claim: &Claim) -> Result<bool> {
        let n = self.n();
        match claim {
            Claim::Property { property, holds, shift, witness } => {
                let a = match shift {
                    Some(s) => self.matrix.shift(s)?,
                    None => self.matrix.clone(),
                };
                let report = verify(*property, &SymMatrix::Exact(a.clone()), &self.graph, &VerifyOptions::default())?;
                if report.verdict != *holds {
                    return Ok(false);
                }
                match witness {
                    None => Ok(true),
                    Some(rows) => Ok(!holds
                        && square_matrix(rows, n)
                            .is_some_and(|x| witness_satisfies(&a, &self.graph, *property, &x))),
                }
            }
            Claim::Q { value } => Ok(q_exact(&self.matrix)? == *value),
            Claim::Spectrum { eigenvalues } => {
                if eigenvalues.iter().map(|e| e.multiplicity).sum::<usize>() != n {
                    return Ok(false);
                }
                for (k, e) in eigenvalues.iter().enumerate() {
                    if eigenvalues[..k].iter().any(|f| f.value == e.value) {
                        return Ok(false);
                    }
                    let shifted = self.matrix.shift(&-&e.value)?;
                    if nullspace_basis_exact(&shifted)?.len() != e.multiplicity {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Claim::SpectrumApprox { values, tol } => {
                if values.len() != n {
                    return Ok(false);
                }
                let mut want = values.clone();
                want.sort_by(f64::total_cmp);
                let got = eig_cluster(&self.matrix.to_f64(), DEFAULT_CLUSTER_TOL)?.raw_eigenvalues;
                Ok(want.iter().zip(&got).all(|(w, g)| (w - g).abs() <= *tol))
            }
            Claim::MultiplicityList { m } => {
                let spectral = eig_cluster(&self.matrix.to_f64(), DEFAULT_CLUSTER_TOL)?;
                Ok(multiplicity_list(&spectral).0 == *m && q_exact(&self.matrix)? == m.len())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bad_claims_are_named() {
        let mut c = flipped_cycle(4).unwrap();
        c.claims = vec![Claim::Q { value: 3 }];
        let err = c.verify().unwrap_err();
        assert!(matches!(err, Error::CorpusIntegrity { ref claim, .. } if claim == "q = 3"));
    }

    #[test]
    fn pattern_mismatch_is_rejected() {
        let mut c = flipped_cycle(5).unwrap();
        c.graph.add_edge(0, 2).unwrap();
        assert!(matches!(c.verify(), Err(Error::CorpusIntegrity { .. })));
    }

    #[test]
    fn json_round_trip() {
        let c = corpus_certificate("bowtie").unwrap();
        let text = serde_json::to_string(&c).unwrap();
        let back: Certificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        assert!(text.contains("\"d\":6"));
    }
}
