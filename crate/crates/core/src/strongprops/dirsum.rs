//! Strong properties of block-diagonal sums.

use nalgebra::DMatrix;

use super::{Property, StrongPropertyReport, VerdictPath};
use crate::error::{Error, Result};
use crate::scalars::{nullspace_basis_exact, ExactMatrix, ExactScalar};
use crate::spectra::{eig_cluster, q_exact, AMBIGUOUS_GAP, DEFAULT_CLUSTER_TOL};
use crate::symmatrix::SymMatrix;

/// Combines the SSP or SMP reports of `a1` and `a2` into the report for
/// `a1 (+) a2`, which has the property iff both blocks do and their spectra
/// are disjoint.
///
/// `rank` is the rank of the combined criterion matrix: block ranks plus
/// the rank of the Sylvester map `W -> A1 W - W A2` on the cross positions.
/// A witness is the embedded block witness, or `[[O, W], [W^T, O]]` for a
/// `W` in the kernel of the Sylvester map when the spectra meet.
pub fn direct_sum_verdict(
    a1: &SymMatrix,
    r1: &StrongPropertyReport,
    a2: &SymMatrix,
    r2: &StrongPropertyReport,
) -> Result<StrongPropertyReport> {
    if r1.property != r2.property {
        return Err(Error::Domain("block reports are for different properties".into()));
    }
    let property = r1.property;
    if property == Property::Sap {
        return Err(Error::Domain("direct sums are decided for the SSP and the SMP only".into()));
    }
    if r1.mode != r2.mode || a1.mode() != r1.mode || a2.mode() != r2.mode {
        return Err(Error::Domain("blocks and reports must share one mode".into()));
    }
    let (n1, n2) = (a1.n(), a2.n());
    let cross = n1 * n2;
    let p = r1.p + r2.p + cross;
    let (overlap, cross_witness, advisory) = match (a1, a2) {
        (SymMatrix::Exact(m1), SymMatrix::Exact(m2)) => exact_overlap(m1, m2)?,
        (SymMatrix::Float(m1), SymMatrix::Float(m2)) => float_overlap(m1, m2)?,
        _ => unreachable!("modes checked above"),
    };
    let rank = r1.rank + r2.rank + cross - overlap;
    let verdict = rank == p;
    let witness = if verdict {
        None
    } else if !r1.verdict {
        r1.witness.as_ref().map(|x| embed(x, 0, n1 + n2))
    } else if !r2.verdict {
        r2.witness.as_ref().map(|x| embed(x, n1, n1 + n2))
    } else {
        cross_witness
    };
    Ok(StrongPropertyReport {
        property,
        verdict,
        p,
        rank,
        mode: r1.mode,
        margin: match (r1.margin, r2.margin) {
            (Some(a), Some(b)) => Some(a.min(b)),
            _ => None,
        },
        witness,
        path: VerdictPath::DirectSum,
        q: match (r1.q, r2.q) {
            (Some(a), Some(b)) if overlap == 0 => Some(a + b),
            _ => None,
        },
        advisory: advisory || r1.advisory || r2.advisory,
    })
}

fn embed(x: &SymMatrix, offset: usize, n: usize) -> SymMatrix {
    match x {
        SymMatrix::Exact(m) => {
            let mut out = ExactMatrix::zeros(n, n);
            for i in 0..m.nrows() {
                for j in 0..m.ncols() {
                    out[(offset + i, offset + j)] = m[(i, j)].clone();
                }
            }
            SymMatrix::Exact(out)
        }
        SymMatrix::Float(m) => {
            let mut out = DMatrix::zeros(n, n);
            out.view_mut((offset, offset), (m.nrows(), m.ncols())).copy_from(m);
            SymMatrix::Float(out)
        }
    }
}

fn cross_matrix_exact(w: &[ExactScalar], n1: usize, n2: usize) -> SymMatrix {
    let mut z = ExactMatrix::zeros(n1 + n2, n1 + n2);
    for i in 0..n1 {
        for j in 0..n2 {
            z[(i, n1 + j)] = w[i * n2 + j].clone();
            z[(n1 + j, i)] = w[i * n2 + j].clone();
        }
    }
    SymMatrix::Exact(z)
}

/// Nullity of the Sylvester map, with a witness when it is positive.
fn exact_overlap(m1: &ExactMatrix, m2: &ExactMatrix) -> Result<(usize, Option<SymMatrix>, bool)> {
    let (n1, n2) = (m1.nrows(), m2.nrows());
    let dim = n1 * n2;
    let mut sylv = ExactMatrix::zeros(dim, dim);
    for i in 0..n1 {
        for j in 0..n2 {
            let row = i * n2 + j;
            for k in 0..n1 {
                sylv[(row, k * n2 + j)] = &sylv[(row, k * n2 + j)] + &m1[(i, k)];
            }
            for k in 0..n2 {
                sylv[(row, i * n2 + k)] = &sylv[(row, i * n2 + k)] - &m2[(k, j)];
            }
        }
    }
    let kernel = if dim == 0 { Vec::new() } else { nullspace_basis_exact(&sylv)? };
    // cross-check against distinct-eigenvalue counts: q(A1 (+) A2) = q1 + q2
    // exactly when the spectra are disjoint
    let q1 = q_exact(m1)?;
    let q2 = q_exact(m2)?;
    let q = q_exact(&m1.direct_sum(m2)?)?;
    if (q == q1 + q2) != kernel.is_empty() {
        return Err(Error::Numeric("Sylvester kernel disagrees with eigenvalue counts".into()));
    }
    let witness = kernel.first().map(|w| cross_matrix_exact(w, n1, n2));
    Ok((kernel.len(), witness, false))
}

fn float_overlap(m1: &DMatrix<f64>, m2: &DMatrix<f64>) -> Result<(usize, Option<SymMatrix>, bool)> {
    let s1 = eig_cluster(m1, DEFAULT_CLUSTER_TOL)?;
    let s2 = eig_cluster(m2, DEFAULT_CLUSTER_TOL)?;
    let (n1, n2) = (m1.nrows(), m2.nrows());
    let norm = s1
        .raw_eigenvalues
        .iter()
        .chain(&s2.raw_eigenvalues)
        .fold(0.0f64, |m, v| m.max(v.abs()));
    let threshold = DEFAULT_CLUSTER_TOL * norm.max(1.0);
    let mut overlap = 0;
    let mut advisory = false;
    let mut witness = None;
    for (i, l1) in s1.eigenvalues.iter().enumerate() {
        for (j, l2) in s2.eigenvalues.iter().enumerate() {
            let gap = (l1 - l2).abs();
            if gap <= threshold {
                overlap += s1.multiplicities[i] * s2.multiplicities[j];
                if witness.is_none() {
                    let z1 = leading_column(&s1.projectors[i]);
                    let z2 = leading_column(&s2.projectors[j]);
                    let mut z = DMatrix::zeros(n1 + n2, n1 + n2);
                    let w = &z1 * z2.transpose();
                    z.view_mut((0, n1), (n1, n2)).copy_from(&w);
                    z.view_mut((n1, 0), (n2, n1)).copy_from(&w.transpose());
                    witness = Some(SymMatrix::Float(z));
                }
            } else if gap < AMBIGUOUS_GAP * threshold {
                advisory = true;
            }
        }
    }
    Ok((overlap, witness, advisory || s1.ambiguous || s2.ambiguous))
}

/// Normalized column of largest norm of a projector (an eigenvector).
fn leading_column(p: &DMatrix<f64>) -> nalgebra::DVector<f64> {
    let k = (0..p.ncols())
        .max_by(|&a, &b| p.column(a).norm().total_cmp(&p.column(b).norm()))
        .expect("nonempty projector");
    p.column(k).normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgraph::Graph;
    use crate::strongprops::{verify_ssp, witness_satisfies};

    fn j3(shift: i64) -> SymMatrix {
        let mut rows = [[1i64; 3]; 3];
        for (i, r) in rows.iter_mut().enumerate() {
            r[i] += shift;
        }
        let refs: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
        SymMatrix::exact(ExactMatrix::from_i64_rows(&refs).unwrap()).unwrap()
    }

    #[test]
    fn j3_blocks() {
        let k3 = Graph::complete(3);
        let a = j3(0);
        let b = j3(5);
        let ra = verify_ssp(&a, &k3).unwrap();
        let rb = verify_ssp(&b, &k3).unwrap();
        let disjoint = direct_sum_verdict(&a, &ra, &b, &rb).unwrap();
        assert!(disjoint.verdict);
        assert_eq!(disjoint.q, None);
        let same = direct_sum_verdict(&a, &ra, &a, &ra).unwrap();
        assert!(!same.verdict);
        let SymMatrix::Exact(x) = same.witness.unwrap() else { panic!() };
        let sum = a.as_exact().unwrap().direct_sum(a.as_exact().unwrap()).unwrap();
        let g = k3.disjoint_union(&k3);
        assert!(witness_satisfies(&sum, &g, Property::Ssp, &x));
        assert!(witness_satisfies(&sum, &g, Property::Smp, &x));
    }
}
