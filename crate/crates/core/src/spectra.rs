//! Eigenstructure: exact distinct-eigenvalue counts, clustered float
//! eigendecompositions, spectral projectors and exact power traces.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{rank_exact, ExactMatrix, ExactScalar};

/// Default relative tolerance for merging eigenvalues into clusters.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

/// Clusters closer than this many tolerances are flagged as ambiguous.
pub const AMBIGUOUS_GAP: f64 = 10.0;

/// Clustered spectral decomposition `A = Σ λ_j E_j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralData {
    /// Cluster means, strictly ascending.
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<usize>,
    /// Orthogonal projectors onto each eigenspace.
    #[serde(skip)]
    pub projectors: Vec<DMatrix<f64>>,
    /// Smallest gap between neighbouring clusters, in units of the merge
    /// threshold. Infinite when there is a single cluster.
    #[serde(serialize_with = "crate::report::ser_f64", deserialize_with = "crate::report::de_f64")]
    pub cluster_gap: f64,
    /// Set when `cluster_gap` is below [`AMBIGUOUS_GAP`].
    pub ambiguous: bool,
    /// Unclustered eigenvalues in ascending order.
    pub raw_eigenvalues: Vec<f64>,
}

impl SpectralData {
    pub fn q(&self) -> usize {
        self.eigenvalues.len()
    }
}

/// Ordered multiplicity list `(m_1, ..., m_q)`, ascending eigenvalue order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiplicityList(pub Vec<usize>);

pub fn multiplicity_list(s: &SpectralData) -> MultiplicityList {
    MultiplicityList(s.multiplicities.clone())
}

/// Number of distinct eigenvalues of a symmetric exact matrix, computed as
/// the degree of its minimal polynomial.
pub fn q_exact(a: &ExactMatrix) -> Result<usize> {
    if !a.is_symmetric() {
        return Err(Error::Shape("q_exact needs a symmetric matrix".into()));
    }
    let n = a.nrows();
    if n == 0 {
        return Ok(0);
    }
    let mut cols: Vec<Vec<ExactScalar>> = Vec::new();
    let mut power = ExactMatrix::identity(n);
    for k in 0..=n {
        cols.push(power.entries().to_vec());
        let m = ExactMatrix::from_columns(n * n, &cols)?;
        if rank_exact(&m)? <= k {
            return Ok(k);
        }
        power = power.mul(a)?;
    }
    unreachable!("the characteristic polynomial annihilates A")
}

/// `tr(A^k)` for `k = 0..=kmax`.
pub fn power_traces(a: &ExactMatrix, kmax: usize) -> Result<Vec<ExactScalar>> {
    if !a.is_square() {
        return Err(Error::Shape("power_traces needs a square matrix".into()));
    }
    let mut out = Vec::with_capacity(kmax + 1);
    let mut power = ExactMatrix::identity(a.nrows());
    for k in 0..=kmax {
        out.push(power.trace());
        if k < kmax {
            power = power.mul(a)?;
        }
    }
    Ok(out)
}

/// Symmetric eigendecomposition with greedy clustering: consecutive sorted
/// eigenvalues within `tol * max(1, ‖A‖₂)` are merged.
pub fn eig_cluster(a: &DMatrix<f64>, tol: f64) -> Result<SpectralData> {
    if a.nrows() != a.ncols() {
        return Err(Error::Shape("eig_cluster needs a square matrix".into()));
    }
    if a.iter().any(|v| !v.is_finite()) {
        return Err(Error::Numeric("matrix has non-finite entries".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::Numeric(format!("tolerance must be positive, got {tol}")));
    }
    let n = a.nrows();
    let eig = SymmetricEigen::new((a + a.transpose()) * 0.5);
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let raw: Vec<f64> = idx.iter().map(|&i| eig.eigenvalues[i]).collect();
    let norm = raw.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let threshold = tol * norm.max(1.0);

    let mut groups: Vec<Vec<usize>> = Vec::new();
    for k in 0..n {
        match groups.last_mut() {
            Some(g) if raw[k] - raw[*g.last().unwrap()] <= threshold => g.push(k),
            _ => groups.push(vec![k]),
        }
    }
    let mut cluster_gap = f64::INFINITY;
    for w in groups.windows(2) {
        let gap = raw[w[1][0]] - raw[*w[0].last().unwrap()];
        cluster_gap = cluster_gap.min(gap / threshold);
    }
    let mut eigenvalues = Vec::new();
    let mut multiplicities = Vec::new();
    let mut projectors = Vec::new();
    for g in &groups {
        eigenvalues.push(g.iter().map(|&k| raw[k]).sum::<f64>() / g.len() as f64);
        multiplicities.push(g.len());
        let mut p = DMatrix::zeros(n, n);
        for &k in g {
            let v = eig.eigenvectors.column(idx[k]);
            p += &v * v.transpose();
        }
        projectors.push(p);
    }
    Ok(SpectralData {
        eigenvalues,
        multiplicities,
        projectors,
        cluster_gap,
        ambiguous: cluster_gap < AMBIGUOUS_GAP,
        raw_eigenvalues: raw,
    })
}
