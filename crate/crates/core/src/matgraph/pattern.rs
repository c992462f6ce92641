//! Off-diagonal zero/nonzero pattern of a symmetric matrix.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::symmatrix::SymMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationReason {
    ZeroOnEdge,
    NonzeroOnNonedge,
    /// Float entry in the band `(tol, 10*tol)`.
    Ambiguous,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PatternViolation {
    pub i: usize,
    pub j: usize,
    pub reason: ViolationReason,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PatternVerdict {
    pub in_class: bool,
    pub violations: Vec<PatternViolation>,
}

enum Cell {
    Zero,
    Nonzero,
    Ambiguous,
}

fn classify(a: &SymMatrix, i: usize, j: usize, tol: f64) -> Cell {
    match a {
        SymMatrix::Exact(m) => {
            if m[(i, j)].is_zero() {
                Cell::Zero
            } else {
                Cell::Nonzero
            }
        }
        SymMatrix::Float(m) => {
            let v = m[(i, j)].abs();
            if v <= tol {
                Cell::Zero
            } else if v >= 10.0 * tol {
                Cell::Nonzero
            } else {
                Cell::Ambiguous
            }
        }
    }
}

/// Graph of the off-diagonal support. Float entries count as nonzero when
/// `|a_ij| > tol`; exact matrices ignore `tol`.
pub fn pattern_of(a: &SymMatrix, tol: f64) -> Graph {
    let n = a.n();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if !matches!(classify(a, i, j, tol), Cell::Zero) {
                g.add_edge(i, j).expect("in range");
            }
        }
    }
    g
}

/// Lists every off-diagonal pair that disagrees with `g`.
pub fn matches_pattern(a: &SymMatrix, g: &Graph, tol: f64) -> PatternVerdict {
    let n = a.n();
    let mut violations = Vec::new();
    if g.n() != n {
        return PatternVerdict {
            in_class: false,
            violations,
        };
    }
    for i in 0..n {
        for j in i + 1..n {
            let reason = match (classify(a, i, j, tol), g.has_edge(i, j)) {
                (Cell::Ambiguous, _) => Some(ViolationReason::Ambiguous),
                (Cell::Zero, true) => Some(ViolationReason::ZeroOnEdge),
                (Cell::Nonzero, false) => Some(ViolationReason::NonzeroOnNonedge),
                _ => None,
            };
            if let Some(reason) = reason {
                violations.push(PatternViolation { i, j, reason });
            }
        }
    }
    PatternVerdict {
        in_class: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ExactMatrix;
    use nalgebra::DMatrix;

    #[test]
    fn diagonal_has_empty_pattern() {
        let d = SymMatrix::exact(ExactMatrix::from_i64_rows(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]).unwrap()).unwrap();
        assert_eq!(pattern_of(&d, 0.0), Graph::empty(3));
    }

    #[test]
    fn float_band_is_reported() {
        let m = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 5e-9, 1.0, 0.0, 1e-12, 5e-9, 1e-12, 0.0]);
        let v = matches_pattern(&SymMatrix::Float(m), &Graph::path(3), 1e-9);
        assert!(!v.in_class);
        assert_eq!(v.violations.len(), 2);
        assert_eq!(v.violations[0].reason, ViolationReason::Ambiguous);
        assert_eq!(v.violations[1].reason, ViolationReason::ZeroOnEdge);
    }
}
