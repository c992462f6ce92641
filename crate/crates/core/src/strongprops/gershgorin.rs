//! Gershgorin sufficient test for the SSP.

use serde::{Deserialize, Serialize};

use crate::matgraph::{pattern_of, Graph};
use crate::scalars::ExactScalar;
use crate::symmatrix::{SymMatrix, DEFAULT_FLOAT_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GershgorinOutcome {
    ProvedSsp,
    /// The test says nothing about the SSP either way.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GershgorinReport {
    pub outcome: GershgorinOutcome,
    /// `i ~ j` iff `|a_ii - a_jj| <= R_i + R_j` with `R_i` the off-diagonal
    /// absolute row sum.
    pub intersection_graph: Graph,
    pub pattern: Graph,
}

/// Proves the SSP when the Gershgorin intersection graph is identically a
/// subgraph of the pattern of `a`.
///
/// Exact matrices compare exactly. Float matrices count near-ties as
/// intersections, which can only turn a proof into `Inconclusive`.
pub fn gershgorin_ssp(a: &SymMatrix) -> GershgorinReport {
    let n = a.n();
    let mut inter = Graph::empty(n);
    match a {
        SymMatrix::Exact(m) => {
            let radius: Vec<ExactScalar> = (0..n)
                .map(|i| {
                    (0..n)
                        .filter(|&l| l != i)
                        .fold(ExactScalar::zero(), |acc, l| acc + m[(i, l)].abs())
                })
                .collect();
            for i in 0..n {
                for j in i + 1..n {
                    let lhs = (&m[(i, i)] - &m[(j, j)]).abs();
                    if lhs <= &radius[i] + &radius[j] {
                        inter.add_edge(i, j).expect("in range");
                    }
                }
            }
        }
        SymMatrix::Float(m) => {
            let radius: Vec<f64> = (0..n)
                .map(|i| (0..n).filter(|&l| l != i).map(|l| m[(i, l)].abs()).sum())
                .collect();
            let scale = m.amax().max(1.0);
            for i in 0..n {
                for j in i + 1..n {
                    let lhs = (m[(i, i)] - m[(j, j)]).abs();
                    if lhs <= radius[i] + radius[j] + 1e-12 * scale * n as f64 {
                        inter.add_edge(i, j).expect("in range");
                    }
                }
            }
        }
    }
    let pattern = pattern_of(a, DEFAULT_FLOAT_TOL);
    let outcome = if inter.is_subgraph_of(&pattern) {
        GershgorinOutcome::ProvedSsp
    } else {
        GershgorinOutcome::Inconclusive
    };
    GershgorinReport {
        outcome,
        intersection_graph: inter,
        pattern,
    }
}
