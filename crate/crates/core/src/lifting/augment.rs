use nalgebra::DMatrix;

use super::{lift, LiftMode, LiftProblem, LiftResult};
use crate::constructs::Certificate;
use crate::error::{Error, Result};
use crate::matgraph::Graph;
use crate::spectra::{eig_cluster, AMBIGUOUS_GAP, DEFAULT_CLUSTER_TOL};
use crate::strongprops::{direct_sum_verdict, verify, Property, VerifyOptions};
use crate::symmatrix::SymMatrix;

/// Extends `c` by isolated vertices carrying the eigenvalues `extra` and
/// lifts the block matrix `A (+) diag(extra)` to `ghat`.
///
/// `embedding[v]` is the vertex of `ghat` playing vertex `v` of the
/// certificate graph; the remaining vertices of `ghat`, in increasing
/// order, receive `extra`. The lift preserves the spectrum when the
/// certificate claims the SSP and the multiplicity list when it claims only
/// the SMP. The result has `|ghat| - |c| + q(A)` distinct eigenvalues.
pub fn augment_and_lift(
    c: &Certificate,
    ghat: &Graph,
    embedding: &[usize],
    extra: &[f64],
) -> Result<LiftResult> {
    let (n, m) = (c.n(), ghat.n());
    if m < n || extra.len() != m - n {
        return Err(Error::Shape(format!(
            "a {n}-vertex certificate in a {m}-vertex graph needs {} extra eigenvalues, got {}",
            m.saturating_sub(n),
            extra.len()
        )));
    }
    let mut used = vec![false; m];
    for &v in embedding {
        if v >= m || std::mem::replace(&mut used[v], true) {
            return Err(Error::Pattern("embedding must be injective into the target graph".into()));
        }
    }
    if embedding.len() != n || c.graph.edges().iter().any(|&(i, j)| !ghat.has_edge(embedding[i], embedding[j])) {
        return Err(Error::Pattern("certificate graph does not embed along the given map".into()));
    }
    let mode = if c.claims_property(Property::Ssp) == Some(true) {
        LiftMode::PreserveSpectrum
    } else if c.claims_property(Property::Smp) == Some(true) {
        LiftMode::PreserveMultiplicityList
    } else {
        return Err(Error::RejectedSeed(format!("certificate `{}` claims neither the SSP nor the SMP", c.id)));
    };

    let a = c.matrix.to_f64();
    let spectral = eig_cluster(&a, DEFAULT_CLUSTER_TOL)?;
    let scale = spectral
        .eigenvalues
        .iter()
        .chain(extra)
        .fold(1.0f64, |s, v| s.max(v.abs()));
    let sep = AMBIGUOUS_GAP * DEFAULT_CLUSTER_TOL * scale;
    for (k, x) in extra.iter().enumerate() {
        if !x.is_finite() {
            return Err(Error::Numeric("extra eigenvalues must be finite".into()));
        }
        if extra[..k].iter().any(|y| (x - y).abs() <= sep) {
            return Err(Error::Distinctness(format!("extra eigenvalue {x} is repeated")));
        }
        if let Some(l) = spectral.eigenvalues.iter().find(|l| (x - *l).abs() <= sep) {
            return Err(Error::SpectrumCollision(format!(
                "extra eigenvalue {x} meets the certificate eigenvalue {l}"
            )));
        }
    }

    let property = mode.property();
    let opts = VerifyOptions::default();
    let block1 = SymMatrix::Float(a.clone());
    let block2 = SymMatrix::Float(DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(extra)));
    let r1 = verify(property, &block1, &c.graph, &opts)?;
    let r2 = verify(property, &block2, &Graph::empty(m - n), &opts)?;
    let combined = direct_sum_verdict(&block1, &r1, &block2, &r2)?;
    if !combined.verdict {
        return Err(Error::RejectedSeed(format!("block matrix lacks the {property}")));
    }

    let others: Vec<usize> = (0..m).filter(|&v| !used[v]).collect();
    let mut seed = DMatrix::zeros(m, m);
    for i in 0..n {
        for j in 0..n {
            seed[(embedding[i], embedding[j])] = a[(i, j)];
        }
    }
    for (&v, &x) in others.iter().zip(extra) {
        seed[(v, v)] = x;
    }

    let result = lift(&LiftProblem::new(seed, ghat.clone(), mode))?;
    let expected = m - n + spectral.q();
    let got = eig_cluster(&result.b.to_f64(), DEFAULT_CLUSTER_TOL)?.q();
    if got != expected {
        return Err(Error::LiftIntegrity(format!(
            "lifted matrix has {got} distinct eigenvalues, expected {expected}"
        )));
    }
    Ok(result)
}
