//! Column generators for the rank criteria, shared by exact and float code.

use crate::scalars::{Scalar, Square};

use super::Property;

/// `vec_rows(A E_ij + E_ij^T A)` for every ordered pair `(i, j)`.
fn sap_columns<T: Scalar>(a: &Square<T>, rows: &[(usize, usize)]) -> Vec<Vec<T>> {
    let n = a.n;
    let mut cols = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            // (A E_ij)_{uv} = a_ui [v = j];  (E_ji A)_{uv} = [u = j] a_iv
            let col = rows
                .iter()
                .map(|&(u, v)| {
                    let mut x = T::zero();
                    if v == j {
                        x = x.add(a.get(u, i));
                    }
                    if u == j {
                        x = x.add(a.get(i, v));
                    }
                    x
                })
                .collect();
            cols.push(col);
        }
    }
    cols
}

/// `vec_rows(A K_ij - K_ij A)` for `i < j`, `K_ij = E_ij - E_ji`.
fn ssp_columns<T: Scalar>(a: &Square<T>, rows: &[(usize, usize)]) -> Vec<Vec<T>> {
    let n = a.n;
    let mut cols = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let col = rows
                .iter()
                .map(|&(u, v)| {
                    // (A K)_{uv} = a_ui [v = j] - a_uj [v = i]
                    // (K A)_{uv} = [u = i] a_jv - [u = j] a_iv
                    let mut x = T::zero();
                    if v == j {
                        x = x.add(a.get(u, i));
                    }
                    if v == i {
                        x = x.sub(a.get(u, j));
                    }
                    if u == i {
                        x = x.sub(a.get(j, v));
                    }
                    if u == j {
                        x = x.add(a.get(i, v));
                    }
                    x
                })
                .collect();
            cols.push(col);
        }
    }
    cols
}

/// Columns of the rank criterion for `property`, restricted to the entry
/// positions `rows`. `q` is the number of power columns `A^0..A^(q-1)`
/// appended for SMP and ignored otherwise.
pub(crate) fn criterion_columns<T: Scalar>(
    a: &Square<T>,
    rows: &[(usize, usize)],
    property: Property,
    q: usize,
) -> Vec<Vec<T>> {
    match property {
        Property::Sap => sap_columns(a, rows),
        Property::Ssp => ssp_columns(a, rows),
        Property::Smp => {
            let mut cols = ssp_columns(a, rows);
            for p in a.powers(q) {
                cols.push(rows.iter().map(|&(u, v)| p.get(u, v).clone()).collect());
            }
            cols
        }
    }
}

/// Upper-triangular positions `(u, v)`, `u <= v`, in lexicographic order.
pub(crate) fn upper_positions(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect()
}
