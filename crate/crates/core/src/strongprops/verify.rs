//! Rank-criterion verifiers.

use nalgebra::DMatrix;

use super::{criterion_columns, verify_by_definition, Property, StrongPropertyReport, VerdictPath};
use crate::error::{Error, Result};
use crate::matgraph::{matches_pattern, Graph};
use crate::scalars::{rank_exact, ExactMatrix, Square, DEFAULT_RANK_TOL};
use crate::spectra::{eig_cluster, q_exact, DEFAULT_CLUSTER_TOL};
use crate::symmatrix::{Mode, SymMatrix, DEFAULT_FLOAT_TOL};

/// Float SMP verdicts whose clustering gap is below this are advisory.
const SMP_ADVISORY_GAP: f64 = 1e2;

/// Tolerances for float-mode verification. Exact mode ignores them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    /// Relative singular-value cutoff for the rank.
    pub rank_tol: f64,
    /// Entries with `|a_ij| <= pattern_tol` count as zero.
    pub pattern_tol: f64,
    /// Relative tolerance for eigenvalue clustering (SMP).
    pub cluster_tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            rank_tol: DEFAULT_RANK_TOL,
            pattern_tol: DEFAULT_FLOAT_TOL,
            cluster_tol: DEFAULT_CLUSTER_TOL,
        }
    }
}

pub fn verify_sap(a: &SymMatrix, g: &Graph) -> Result<StrongPropertyReport> {
    verify(Property::Sap, a, g, &VerifyOptions::default())
}

pub fn verify_ssp(a: &SymMatrix, g: &Graph) -> Result<StrongPropertyReport> {
    verify(Property::Ssp, a, g, &VerifyOptions::default())
}

pub fn verify_smp(a: &SymMatrix, g: &Graph) -> Result<StrongPropertyReport> {
    verify(Property::Smp, a, g, &VerifyOptions::default())
}

pub(crate) fn check_pattern(a: &SymMatrix, g: &Graph, tol: f64) -> Result<()> {
    if a.n() != g.n() {
        return Err(Error::Pattern(format!(
            "matrix has order {} but the graph has {} vertices",
            a.n(),
            g.n()
        )));
    }
    let v = matches_pattern(a, g, tol);
    if let Some(first) = v.violations.first() {
        return Err(Error::Pattern(format!(
            "{} violation(s), first at ({}, {}): {:?}",
            v.violations.len(),
            first.i + 1,
            first.j + 1,
            first.reason
        )));
    }
    Ok(())
}

/// Decides `property` for `a` with graph `g` by the rank criterion.
///
/// Exact failures carry a witness from the definitional system; float
/// failures carry the left singular vector of the smallest singular value
/// reshaped onto the non-edges.
pub fn verify(
    property: Property,
    a: &SymMatrix,
    g: &Graph,
    opts: &VerifyOptions,
) -> Result<StrongPropertyReport> {
    check_pattern(a, g, opts.pattern_tol)?;
    let rows = g.non_edges();
    let p = rows.len();
    match a {
        SymMatrix::Exact(m) => {
            let q = match property {
                Property::Smp => Some(q_exact(m)?),
                _ => None,
            };
            let cols = criterion_columns(&Square::from(m), &rows, property, q.unwrap_or(0));
            let rank = if p == 0 {
                0
            } else {
                rank_exact(&ExactMatrix::from_columns(p, &cols)?)?
            };
            let verdict = rank == p;
            let witness = if verdict {
                None
            } else {
                let def = verify_by_definition(a, g, property)?;
                if def.verdict {
                    return Err(Error::Numeric(format!(
                        "{property}: rank criterion gives rank {rank} < {p} but the definitional system is trivial"
                    )));
                }
                def.witness
            };
            Ok(StrongPropertyReport {
                property,
                verdict,
                p,
                rank,
                mode: Mode::Exact,
                margin: None,
                witness,
                path: VerdictPath::RankCriterion,
                q,
                advisory: false,
            })
        }
        SymMatrix::Float(m) => {
            let (q, advisory) = match property {
                Property::Smp => {
                    let s = eig_cluster(m, opts.cluster_tol)?;
                    (Some(s.q()), s.cluster_gap < SMP_ADVISORY_GAP)
                }
                _ => (None, false),
            };
            let cols = criterion_columns(&Square::from(m), &rows, property, q.unwrap_or(0));
            let mat = DMatrix::from_fn(p, cols.len(), |r, c| cols[c][r]);
            let (rank, margin, witness) = float_criterion(&mat, opts.rank_tol, &rows, m.nrows())?;
            Ok(StrongPropertyReport {
                property,
                verdict: rank == p,
                p,
                rank,
                mode: Mode::Float,
                margin: Some(margin),
                witness: witness.map(SymMatrix::Float),
                path: VerdictPath::RankCriterion,
                q,
                advisory,
            })
        }
    }
}

/// Rank of a `p x c` criterion matrix with its decision margin.
///
/// With full row rank the margin is `sigma_min / (tol * sigma_max)`, the
/// distance of the smallest singular value from the cutoff; otherwise it is
/// the smallest kept over the largest dropped singular value.
pub(crate) fn float_criterion(
    mat: &DMatrix<f64>,
    tol: f64,
    rows: &[(usize, usize)],
    n: usize,
) -> Result<(usize, f64, Option<DMatrix<f64>>)> {
    if !(tol > 0.0) {
        return Err(Error::Numeric(format!("tolerance must be positive, got {tol}")));
    }
    if mat.iter().any(|v| !v.is_finite()) {
        return Err(Error::Numeric("matrix has non-finite entries".into()));
    }
    let p = mat.nrows();
    if p == 0 {
        return Ok((0, f64::INFINITY, None));
    }
    // pad to a square-or-wide shape so the left singular basis is complete
    let work = if mat.ncols() < p {
        let mut w = DMatrix::zeros(p, p);
        w.columns_mut(0, mat.ncols()).copy_from(mat);
        w
    } else {
        mat.clone()
    };
    let svd = work.svd(true, false);
    let u = svd.u.as_ref().expect("left vectors requested");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let sv: Vec<f64> = order.iter().map(|&k| svd.singular_values[k]).collect();
    let smax = sv[0];
    if smax == 0.0 {
        let x = witness_from(u.column(order[0]).iter().copied(), rows, n);
        return Ok((0, f64::INFINITY, Some(x)));
    }
    let cutoff = tol * smax;
    let rank = sv.iter().take_while(|&&s| s > cutoff).count().min(p);
    if rank == p {
        return Ok((rank, sv[p - 1] / cutoff, None));
    }
    let margin = if sv[rank] == 0.0 {
        f64::INFINITY
    } else if rank == 0 {
        0.0
    } else {
        sv[rank - 1] / sv[rank]
    };
    let y = u.column(order[p - 1]);
    Ok((rank, margin, Some(witness_from(y.iter().copied(), rows, n))))
}

fn witness_from(y: impl Iterator<Item = f64>, rows: &[(usize, usize)], n: usize) -> DMatrix<f64> {
    let mut x = DMatrix::zeros(n, n);
    for (&(u, v), val) in rows.iter().zip(y) {
        x[(u, v)] = val;
        x[(v, u)] = val;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_is_vacuous() {
        let a = SymMatrix::exact(ExactMatrix::from_i64_rows(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap()).unwrap();
        for prop in Property::ALL {
            let r = verify(prop, &a, &Graph::complete(3), &VerifyOptions::default()).unwrap();
            assert!(r.verdict && r.p == 0);
        }
    }

    #[test]
    fn pattern_mismatch_is_an_error() {
        let a = SymMatrix::exact(ExactMatrix::identity(2)).unwrap();
        assert!(matches!(verify_ssp(&a, &Graph::complete(2)), Err(Error::Pattern(_))));
    }

    #[test]
    fn repeated_diagonal_fails_ssp_with_witness() {
        let a = SymMatrix::exact(ExactMatrix::from_i64_rows(&[&[1, 0], &[0, 1]]).unwrap()).unwrap();
        let r = verify_ssp(&a, &Graph::empty(2)).unwrap();
        assert!(!r.verdict);
        assert_eq!((r.p, r.rank), (1, 0));
        let x = r.witness.unwrap();
        assert!(!x.as_exact().unwrap().is_zero());
        // invertible matrices have the SAP
        assert!(verify_sap(&a, &Graph::empty(2)).unwrap().verdict);
    }

    #[test]
    fn float_witness_shape() {
        let a = SymMatrix::Float(DMatrix::identity(3, 3));
        let r = verify_ssp(&a, &Graph::empty(3)).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.rank, 0);
        let SymMatrix::Float(x) = r.witness.unwrap() else { panic!() };
        assert!((x.norm() - 2f64.sqrt()).abs() < 1e-12);
    }
}
