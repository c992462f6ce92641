//! The definitional system on the unknown symmetric matrix `X`.

use super::{verify::check_pattern, Property, StrongPropertyReport, VerdictPath};
use crate::error::{Error, Result};
use crate::matgraph::Graph;
use crate::scalars::{nullspace_basis_exact, ExactMatrix, ExactScalar};
use crate::symmatrix::{Mode, SymMatrix};

fn sym_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u <= v { (u, v) } else { (v, u) };
    u * (2 * n - u + 1) / 2 + (v - u)
}

/// Builds the linear system whose solutions are the symmetric `X` with
/// `I∘X = O`, `A∘X = O` and
/// * SAP: `AX = O`,
/// * SSP: `AX - XA = O`,
/// * SMP: `AX - XA = O` and `tr(A^k X) = 0` for `k = 0..n-1`.
fn definitional_rows(a: &ExactMatrix, g: &Graph, property: Property) -> Result<Vec<Vec<ExactScalar>>> {
    let n = a.nrows();
    let unknowns = n * (n + 1) / 2;
    let unit = |k: usize| {
        let mut r = vec![ExactScalar::zero(); unknowns];
        r[k] = ExactScalar::one();
        r
    };
    let mut rows = Vec::new();
    for i in 0..n {
        rows.push(unit(sym_index(n, i, i)));
    }
    for (i, j) in g.edges() {
        rows.push(unit(sym_index(n, i, j)));
    }
    for u in 0..n {
        for v in 0..n {
            let mut r = vec![ExactScalar::zero(); unknowns];
            for k in 0..n {
                // (AX)_{uv} = sum_k a_uk x_kv
                let idx = sym_index(n, k, v);
                r[idx] = &r[idx] + &a[(u, k)];
                if property != Property::Sap {
                    // -(XA)_{uv} = -sum_k x_uk a_kv
                    let idx = sym_index(n, u, k);
                    r[idx] = &r[idx] - &a[(k, v)];
                }
            }
            rows.push(r);
        }
    }
    if property == Property::Smp {
        let mut power = ExactMatrix::identity(n);
        for _ in 0..n {
            let mut r = vec![ExactScalar::zero(); unknowns];
            for u in 0..n {
                for v in 0..n {
                    let idx = sym_index(n, u, v);
                    r[idx] = &r[idx] + &power[(u, v)];
                }
            }
            rows.push(r);
            power = power.mul(a)?;
        }
    }
    Ok(rows)
}

/// Decides `property` from the definition by computing the exact nullspace
/// of the system on `X`. Independent of the rank criteria.
pub fn verify_by_definition(a: &SymMatrix, g: &Graph, property: Property) -> Result<StrongPropertyReport> {
    let SymMatrix::Exact(m) = a else {
        return Err(Error::ExactOnly("the definitional system needs exact entries".into()));
    };
    check_pattern(a, g, 0.0)?;
    let n = m.nrows();
    let p = g.non_edges().len();
    let rows = definitional_rows(m, g, property)?;
    let system = ExactMatrix::from_rows(rows)?;
    let basis = nullspace_basis_exact(&system)?;
    let witness = match basis.first() {
        None => None,
        Some(v) => {
            let mut x = ExactMatrix::zeros(n, n);
            for u in 0..n {
                for w in 0..n {
                    x[(u, w)] = v[sym_index(n, u, w)].clone();
                }
            }
            Some(SymMatrix::Exact(x))
        }
    };
    Ok(StrongPropertyReport {
        property,
        verdict: basis.is_empty(),
        p,
        rank: p.saturating_sub(basis.len()),
        mode: Mode::Exact,
        margin: None,
        witness,
        path: VerdictPath::Definition,
        q: None,
        advisory: false,
    })
}

/// Exact check that `x` is a nonzero solution of the definitional system.
pub fn witness_satisfies(a: &ExactMatrix, g: &Graph, property: Property, x: &ExactMatrix) -> bool {
    let n = a.nrows();
    if x.nrows() != n || !x.is_symmetric() || x.is_zero() {
        return false;
    }
    if (0..n).any(|i| !x[(i, i)].is_zero()) || g.edges().iter().any(|&(i, j)| !x[(i, j)].is_zero()) {
        return false;
    }
    let Ok(ax) = a.mul(x) else { return false };
    let ok = match property {
        Property::Sap => ax.is_zero(),
        _ => x.mul(a).map(|xa| ax == xa).unwrap_or(false),
    };
    if !ok {
        return false;
    }
    if property == Property::Smp {
        let mut power = ExactMatrix::identity(n);
        for _ in 0..n {
            match power.mul(x) {
                Ok(px) if px.trace().is_zero() => {}
                _ => return false,
            }
            power = match power.mul(a) {
                Ok(p) => p,
                Err(_) => return false,
            };
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym_index_is_dense() {
        let n = 4;
        let mut seen: Vec<usize> = (0..n).flat_map(|u| (u..n).map(move |v| sym_index(n, u, v))).collect();
        seen.sort_unstable();
        assert_eq!(seen, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn diagonal_examples() {
        let d = SymMatrix::exact(ExactMatrix::from_i64_rows(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]).unwrap()).unwrap();
        assert!(verify_by_definition(&d, &Graph::empty(3), Property::Ssp).unwrap().verdict);
        let rep = SymMatrix::exact(ExactMatrix::from_i64_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 3]]).unwrap()).unwrap();
        let r = verify_by_definition(&rep, &Graph::empty(3), Property::Ssp).unwrap();
        assert!(!r.verdict);
        let x = r.witness.unwrap();
        let x = x.as_exact().unwrap();
        // E_12 + E_21 up to scaling
        assert!(!x[(0, 1)].is_zero());
        assert!(x[(0, 2)].is_zero() && x[(1, 2)].is_zero());
        assert!(witness_satisfies(rep.as_exact().unwrap(), &Graph::empty(3), Property::Ssp, x));
    }

    #[test]
    fn float_is_rejected() {
        let a = SymMatrix::Float(nalgebra::DMatrix::identity(2, 2));
        assert!(matches!(
            verify_by_definition(&a, &Graph::empty(2), Property::Ssp),
            Err(Error::ExactOnly(_))
        ));
    }
}
