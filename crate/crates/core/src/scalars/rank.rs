//! Rank and nullspace kernels shared by every verifier.

use nalgebra::DMatrix;

use super::exact::ExactScalar;
use super::matrix::ExactMatrix;
use crate::error::{Error, Result};

/// Default relative tolerance for [`rank_float`].
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Reduced row echelon form; returns the pivot column of each nonzero row.
fn rref(m: &ExactMatrix) -> Result<(Vec<Vec<ExactScalar>>, Vec<usize>)> {
    m.radicand()?;
    let (nrows, ncols) = (m.nrows(), m.ncols());
    let mut rows: Vec<Vec<ExactScalar>> = (0..nrows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for v in rows[r][c..].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !pv.is_zero() {
                    *v = &*v - &(&f * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Ok((rows, pivots))
}

/// Rank over `Q(sqrt(d))` by exact Gaussian elimination.
pub fn rank_exact(m: &ExactMatrix) -> Result<usize> {
    Ok(rref(m)?.1.len())
}

/// Basis of `{v : Mv = 0}`, one vector per free column, each checked by substitution.
pub fn nullspace_basis_exact(m: &ExactMatrix) -> Result<Vec<Vec<ExactScalar>>> {
    let (rows, pivots) = rref(m)?;
    let ncols = m.ncols();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![ExactScalar::zero(); ncols];
        v[free] = ExactScalar::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        if m.mul_vec(&v).iter().any(|x| !x.is_zero()) {
            return Err(Error::Numeric("nullspace vector failed substitution".into()));
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Numerical rank with a relative cutoff.
///
/// Singular values above `tol * sigma_max` are kept. The margin is the
/// smallest kept singular value over the largest dropped one, infinite when
/// nothing is dropped.
pub fn rank_float(m: &DMatrix<f64>, tol: f64) -> Result<(usize, f64)> {
    rank_float_scaled(m, tol, 0.0)
}

/// [`rank_float`] with the cutoff `tol * max(sigma_max, scale)`, for spans
/// whose generators may all vanish up to roundoff of size `scale`.
pub fn rank_float_scaled(m: &DMatrix<f64>, tol: f64, scale: f64) -> Result<(usize, f64)> {
    if !(tol > 0.0) {
        return Err(Error::Numeric(format!("tolerance must be positive, got {tol}")));
    }
    if m.iter().any(|v| !v.is_finite()) {
        return Err(Error::Numeric("matrix has non-finite entries".into()));
    }
    if m.nrows() == 0 || m.ncols() == 0 {
        return Ok((0, f64::INFINITY));
    }
    let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    let top = sv[0].max(scale);
    if top == 0.0 {
        return Ok((0, f64::INFINITY));
    }
    let cutoff = tol * top;
    let rank = sv.iter().take_while(|&&s| s > cutoff).count();
    let margin = if rank == sv.len() || sv[rank] == 0.0 {
        f64::INFINITY
    } else if rank == 0 {
        top / sv[0]
    } else {
        sv[rank - 1] / sv[rank]
    };
    Ok((rank, margin))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_zero() {
        assert_eq!(rank_exact(&ExactMatrix::identity(3)).unwrap(), 3);
        assert_eq!(rank_exact(&ExactMatrix::zeros(4, 4)).unwrap(), 0);
        assert!(nullspace_basis_exact(&ExactMatrix::identity(3)).unwrap().is_empty());
    }

    #[test]
    fn row_vector_kernel() {
        let m = ExactMatrix::from_i64_rows(&[&[1, -1]]).unwrap();
        let basis = nullspace_basis_exact(&m).unwrap();
        assert_eq!(basis, vec![vec![ExactScalar::one(), ExactScalar::one()]]);
    }

    #[test]
    fn diagonally_dominant_block() {
        let m = ExactMatrix::from_i64_rows(&[
            &[-3, -1, 1, 0],
            &[-1, -3, 0, 1],
            &[1, 0, -3, -1],
            &[0, 1, -1, -3],
        ])
        .unwrap();
        assert_eq!(rank_exact(&m).unwrap(), 4);
        let (r, margin) = rank_float(&m.to_f64(), DEFAULT_RANK_TOL).unwrap();
        assert_eq!(r, 4);
        assert!(margin.is_infinite());
    }

    #[test]
    fn mixed_radicands_rejected() {
        let m = ExactMatrix::new(1, 2, vec![ExactScalar::sqrt(2), ExactScalar::sqrt(3)]);
        assert!(matches!(m, Err(Error::InvalidField(_))));
    }

    #[test]
    fn surd_rank() {
        // rows (1, sqrt2) and (sqrt2, 2) are dependent over Q(sqrt2)
        let r2 = ExactScalar::sqrt(2);
        let m = ExactMatrix::from_rows(vec![
            vec![ExactScalar::one(), r2.clone()],
            vec![r2, ExactScalar::from_int(2)],
        ])
        .unwrap();
        assert_eq!(rank_exact(&m).unwrap(), 1);
    }

    #[test]
    fn float_rank_one_and_identity() {
        let (r, m) = rank_float(&DMatrix::identity(5, 5), 1e-10).unwrap();
        assert_eq!((r, m), (5, f64::INFINITY));
        let u = nalgebra::DVector::from_vec(vec![1.0, -2.0, 0.5, 3.0]);
        let (r, margin) = rank_float(&(&u * u.transpose()), 1e-10).unwrap();
        assert_eq!(r, 1);
        assert!(margin > 1e10);
    }

    #[test]
    fn float_rank_errors() {
        let mut m = DMatrix::identity(2, 2);
        m[(0, 1)] = f64::NAN;
        assert!(matches!(rank_float(&m, 1e-9), Err(Error::Numeric(_))));
        assert!(rank_float(&DMatrix::identity(2, 2), 0.0).is_err());
    }
}
