//! Tangent-space dimensions and the edge-count conditions they imply.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{criterion_columns, upper_positions, Property};
use crate::error::{Error, Result};
use crate::matgraph::{pattern_of, Graph};
use crate::scalars::{rank_exact, rank_float, rank_float_scaled, Square};
use crate::spectra::{eig_cluster, multiplicity_list, q_exact, MultiplicityList, DEFAULT_CLUSTER_TOL};
use crate::symmatrix::{SymMatrix, DEFAULT_FLOAT_TOL};

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Dimensions of the tangent spaces at `A` of the constant-rank,
/// constant-spectrum and constant-multiplicity-list manifolds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentDims {
    pub n: usize,
    pub dim_rank_tangent: usize,
    pub dim_spec_tangent: usize,
    pub dim_mult_tangent: usize,
    pub r: usize,
    pub m: MultiplicityList,
    pub q: usize,
}

/// `C(n+1,2) - C(n-r+1,2)`, `C(n,2) - Σ C(m_i,2)` and that plus `q`.
pub fn tangent_dims_closed_form(n: usize, r: usize, m: &[usize]) -> TangentDims {
    let spec = choose2(n) - m.iter().map(|&k| choose2(k)).sum::<usize>();
    TangentDims {
        n,
        dim_rank_tangent: choose2(n + 1) - choose2(n - r + 1),
        dim_spec_tangent: spec,
        dim_mult_tangent: spec + m.len(),
        r,
        m: MultiplicityList(m.to_vec()),
        q: m.len(),
    }
}

/// Closed-form dimensions from the rank and clustered spectrum of `a`.
///
/// Exact matrices use exact rank and check the cluster count against the
/// exact number of distinct eigenvalues.
pub fn tangent_dims(a: &SymMatrix) -> Result<TangentDims> {
    let n = a.n();
    let f = a.to_f64();
    let spectral = eig_cluster(&f, DEFAULT_CLUSTER_TOL)?;
    let r = match a {
        SymMatrix::Exact(m) => {
            let q = q_exact(m)?;
            if q != spectral.q() {
                return Err(Error::Numeric(format!(
                    "clustering found {} eigenvalues, exact count is {q}",
                    spectral.q()
                )));
            }
            rank_exact(m)?
        }
        SymMatrix::Float(m) => rank_float(m, DEFAULT_FLOAT_TOL)?.0,
    };
    Ok(tangent_dims_closed_form(n, r, &multiplicity_list(&spectral).0))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpanRank {
    pub rank: usize,
    #[serde(serialize_with = "crate::report::ser_f64", deserialize_with = "crate::report::de_f64")]
    pub margin: f64,
}

/// Numerical ranks of the three spanning sets `{A E_ij + E_ij^T A}`,
/// `{A K_ij - K_ij A}` and the latter with `A^0..A^(q-1)`, as vectors over
/// all upper-triangular positions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TangentSpanRanks {
    pub rank_tangent: SpanRank,
    pub spec_tangent: SpanRank,
    pub mult_tangent: SpanRank,
}

pub fn tangent_span_ranks(a: &DMatrix<f64>, q: usize, tol: f64) -> Result<TangentSpanRanks> {
    let rows = upper_positions(a.nrows());
    let sq = Square::from(a);
    let scale = a.norm();
    let rank_of = |property| -> Result<SpanRank> {
        let cols = criterion_columns(&sq, &rows, property, q);
        let m = DMatrix::from_fn(rows.len(), cols.len(), |r, c| cols[c][r]);
        let (rank, margin) = rank_float_scaled(&m, tol, scale)?;
        Ok(SpanRank { rank, margin })
    };
    Ok(TangentSpanRanks {
        rank_tangent: rank_of(Property::Sap)?,
        spec_tangent: rank_of(Property::Ssp)?,
        mult_tangent: rank_of(Property::Smp)?,
    })
}

/// The three necessary edge-count conditions for transversality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBoundReport {
    pub edges: usize,
    pub bipartite: bool,
    /// `C(n-r+1, 2)`, minus one for bipartite graphs.
    pub rank_bound: i64,
    pub sap_excluded: bool,
    /// `Σ C(m_i, 2)`.
    pub ssp_bound: i64,
    pub ssp_excluded: bool,
    /// `Σ C(m_i, 2) - q + 2`.
    pub smp_bound: i64,
    pub smp_excluded: bool,
}

/// Evaluates the edge-count conditions for a matrix in `S(g)` with
/// multiplicity list `m` and rank `r`. A property is excluded when `g` has
/// fewer edges than its bound.
pub fn edge_bounds(g: &Graph, m: &[usize], r: usize) -> Result<EdgeBoundReport> {
    let n = g.n();
    if m.iter().sum::<usize>() != n || m.contains(&0) {
        return Err(Error::Shape(format!("multiplicity list {m:?} does not partition {n}")));
    }
    if r > n {
        return Err(Error::Shape(format!("rank {r} exceeds order {n}")));
    }
    if m.len() <= 1 {
        return Err(Error::Domain("a scalar matrix is outside the hypotheses of the edge bounds".into()));
    }
    let edges = g.edge_count();
    let bipartite = g.is_bipartite();
    let rank_bound = choose2(n - r + 1) as i64 - bipartite as i64;
    let ssp_bound = m.iter().map(|&k| choose2(k)).sum::<usize>() as i64;
    let smp_bound = ssp_bound - m.len() as i64 + 2;
    let e = edges as i64;
    Ok(EdgeBoundReport {
        edges,
        bipartite,
        rank_bound,
        sap_excluded: e < rank_bound,
        ssp_bound,
        ssp_excluded: e < ssp_bound,
        smp_bound,
        smp_excluded: e < smp_bound,
    })
}

/// [`edge_bounds`] with `m` and `r` taken from `a`, whose pattern must be `g`.
pub fn edge_bound_check(g: &Graph, a: &SymMatrix) -> Result<EdgeBoundReport> {
    if pattern_of(a, DEFAULT_FLOAT_TOL) != *g {
        return Err(Error::Pattern("matrix pattern differs from the graph".into()));
    }
    let dims = tangent_dims(a)?;
    edge_bounds(g, &dims.m.0, dims.r)
}
