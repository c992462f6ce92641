//! Lifting a strong-property matrix to a supergraph by Newton continuation
//! on the isospectral (or fixed multiplicity list) manifold.
//!
//! Iterates are `B = U (A + Σ c_j P_j) U^T` with `U` a product of
//! exponentials of skew-symmetric matrices, so the spectrum (or the
//! multiplicity list) of the seed is kept by construction. The new edges
//! are driven from `0` to `t` while the remaining non-edges stay `0`.

mod augment;
mod newton;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, PathStep, Result};
use crate::matgraph::{matches_pattern, pattern_of, Graph, PatternVerdict};
use crate::spectra::{eig_cluster, multiplicity_list, DEFAULT_CLUSTER_TOL};
use crate::strongprops::{verify, Property, VerifyOptions};
use crate::symmatrix::{SymMatrix, DEFAULT_FLOAT_TOL};

pub use augment::augment_and_lift;

/// Seeds whose float rank margin is below this are rejected.
pub const SEED_MARGIN_THRESHOLD: f64 = 1e3;
pub const DEFAULT_LIFT_STEPS: usize = 16;
pub const DEFAULT_NEWTON_TOL: f64 = 1e-10;
/// Step halvings allowed per continuation step before giving up.
pub const MAX_HALVINGS: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftMode {
    PreserveSpectrum,
    PreserveMultiplicityList,
}

impl LiftMode {
    pub fn property(self) -> Property {
        match self {
            LiftMode::PreserveSpectrum => Property::Ssp,
            LiftMode::PreserveMultiplicityList => Property::Smp,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LiftProblem {
    /// Seed matrix; its pattern is the starting graph.
    pub seed: DMatrix<f64>,
    /// Target graph on the same vertices, containing the seed's edges.
    pub supergraph: Graph,
    pub mode: LiftMode,
    /// Value of the new entries; `None` picks [`default_t_target`].
    pub t_target: Option<f64>,
    pub steps: usize,
    pub newton_tol: f64,
}

impl LiftProblem {
    pub fn new(seed: DMatrix<f64>, supergraph: Graph, mode: LiftMode) -> Self {
        LiftProblem {
            seed,
            supergraph,
            mode,
            t_target: None,
            steps: DEFAULT_LIFT_STEPS,
            newton_tol: DEFAULT_NEWTON_TOL,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LiftResult {
    pub b: SymMatrix,
    pub mode: LiftMode,
    pub t_target: f64,
    /// `max |sort(eig(B)) - sort(eig(A))|`. In multiplicity-list mode this
    /// is the eigenvalue drift.
    pub spectrum_error: f64,
    pub pattern_report: PatternVerdict,
    /// Float rank margin of `B` for the SSP (spectrum mode) or the SMP.
    #[serde(serialize_with = "crate::report::ser_f64", deserialize_with = "crate::report::de_f64")]
    pub ssp_margin: f64,
    /// Smallest `|b_ij|` over the edges of the seed graph.
    pub min_seed_edge_entry: f64,
    pub path_log: Vec<PathStep>,
}

/// `0.1` times the smallest nonzero off-diagonal `|a_ij|`. Without edges
/// it is `0.1 * min(1, smallest gap between distinct eigenvalues)`.
pub fn default_t_target(seed: &DMatrix<f64>) -> f64 {
    let g = pattern_of(&SymMatrix::Float(seed.clone()), DEFAULT_FLOAT_TOL);
    let min_entry = g.edges().iter().map(|&(i, j)| seed[(i, j)].abs()).fold(f64::INFINITY, f64::min);
    if min_entry.is_finite() {
        return 0.1 * min_entry;
    }
    let spectral = eig_cluster(seed, DEFAULT_CLUSTER_TOL).ok();
    let gap = spectral
        .map(|s| s.eigenvalues.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min))
        .unwrap_or(f64::INFINITY);
    0.1 * gap.min(1.0)
}

fn spectrum_error(a: &DMatrix<f64>, b: &DMatrix<f64>) -> Result<f64> {
    let ea = eig_cluster(a, DEFAULT_CLUSTER_TOL)?.raw_eigenvalues;
    let eb = eig_cluster(b, DEFAULT_CLUSTER_TOL)?.raw_eigenvalues;
    Ok(ea.iter().zip(&eb).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
}

/// Lifts in [`LiftMode::PreserveSpectrum`].
pub fn lift_ssp(problem: &LiftProblem) -> Result<LiftResult> {
    if problem.mode != LiftMode::PreserveSpectrum {
        return Err(Error::Domain("lift_ssp needs the preserve-spectrum mode".into()));
    }
    lift(problem)
}

/// Lifts in [`LiftMode::PreserveMultiplicityList`].
pub fn lift_smp(problem: &LiftProblem) -> Result<LiftResult> {
    if problem.mode != LiftMode::PreserveMultiplicityList {
        return Err(Error::Domain("lift_smp needs the preserve-multiplicity-list mode".into()));
    }
    lift(problem)
}

/// Runs the continuation for either mode.
pub fn lift(problem: &LiftProblem) -> Result<LiftResult> {
    let n = problem.seed.nrows();
    let seed = match SymMatrix::float(problem.seed.clone(), DEFAULT_FLOAT_TOL)? {
        SymMatrix::Float(m) => m,
        SymMatrix::Exact(_) => unreachable!("float constructor"),
    };
    let gt = &problem.supergraph;
    if gt.n() != n {
        return Err(Error::Shape(format!("seed has order {n}, supergraph has {} vertices", gt.n())));
    }
    if !(problem.newton_tol > 0.0) || problem.steps == 0 {
        return Err(Error::InvalidField("newton_tol must be positive and steps at least 1".into()));
    }
    let g = pattern_of(&SymMatrix::Float(seed.clone()), DEFAULT_FLOAT_TOL);
    if !g.is_subgraph_of(gt) {
        return Err(Error::Pattern("seed graph is not a subgraph of the supergraph".into()));
    }
    let property = problem.mode.property();
    let report = verify(property, &SymMatrix::Float(seed.clone()), &g, &VerifyOptions::default())?;
    let margin = report.margin.unwrap_or(0.0);
    if !report.verdict || margin < SEED_MARGIN_THRESHOLD {
        return Err(Error::RejectedSeed(format!(
            "seed {} {property} (rank {} of {}, margin {margin:.3e}, threshold {SEED_MARGIN_THRESHOLD:e})",
            if report.verdict { "has" } else { "lacks" },
            report.rank,
            report.p
        )));
    }
    let t_target = problem.t_target.unwrap_or_else(|| default_t_target(&seed));
    if !(t_target.is_finite() && t_target > 0.0) {
        return Err(Error::InvalidField(format!("t_target must be positive, got {t_target}")));
    }

    let rows = g.non_edges();
    let new_edges: Vec<bool> = rows.iter().map(|&(i, j)| gt.has_edge(i, j)).collect();
    if !new_edges.contains(&true) {
        return Ok(LiftResult {
            b: SymMatrix::Float(seed.clone()),
            mode: problem.mode,
            t_target,
            spectrum_error: 0.0,
            pattern_report: matches_pattern(&SymMatrix::Float(seed.clone()), gt, problem.newton_tol),
            ssp_margin: margin,
            min_seed_edge_entry: min_edge_entry(&seed, &g),
            path_log: Vec::new(),
        });
    }

    let projectors = match problem.mode {
        LiftMode::PreserveSpectrum => Vec::new(),
        LiftMode::PreserveMultiplicityList => eig_cluster(&seed, DEFAULT_CLUSTER_TOL)?.projectors,
    };
    let system = newton::System { seed: &seed, projectors: &projectors, rows: &rows, new_edges: &new_edges };
    let (mut b, path_log) = newton::continuation(&system, t_target, problem.steps, problem.newton_tol)?;

    for (i, j) in gt.non_edges() {
        b[(i, j)] = 0.0;
        b[(j, i)] = 0.0;
    }
    let b_sym = SymMatrix::Float(b.clone());
    let pattern_report = matches_pattern(&b_sym, gt, problem.newton_tol);
    if !pattern_report.in_class {
        return Err(Error::LiftIntegrity(format!(
            "result leaves the pattern of the supergraph at {} position(s)",
            pattern_report.violations.len()
        )));
    }
    if problem.mode == LiftMode::PreserveMultiplicityList {
        let before = multiplicity_list(&eig_cluster(&seed, DEFAULT_CLUSTER_TOL)?);
        let after = multiplicity_list(&eig_cluster(&b, DEFAULT_CLUSTER_TOL)?);
        if before != after {
            return Err(Error::LiftIntegrity(format!(
                "multiplicity list changed from {:?} to {:?}",
                before.0, after.0
            )));
        }
    }
    let check = verify(property, &b_sym, gt, &VerifyOptions::default())?;
    if !check.verdict {
        return Err(Error::LiftIntegrity(format!("lifted matrix fails the {property} re-check")));
    }
    Ok(LiftResult {
        spectrum_error: spectrum_error(&seed, &b)?,
        b: b_sym,
        mode: problem.mode,
        t_target,
        pattern_report,
        ssp_margin: check.margin.unwrap_or(f64::INFINITY),
        min_seed_edge_entry: min_edge_entry(&b, &g),
        path_log,
    })
}

fn min_edge_entry(b: &DMatrix<f64>, g: &Graph) -> f64 {
    g.edges().iter().map(|&(i, j)| b[(i, j)].abs()).fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgraph::named;

    fn star() -> DMatrix<f64> {
        DMatrix::from_row_slice(4, 4, &[0., 1., 1., 1., 1., 0., 0., 0., 1., 0., 0., 0., 1., 0., 0., 0.])
    }

    #[test]
    fn identity_lift() {
        let r = lift_ssp(&LiftProblem::new(star(), Graph::star(3), LiftMode::PreserveSpectrum)).unwrap();
        assert!(r.path_log.is_empty());
        assert_eq!(r.b, SymMatrix::Float(star()));
    }

    #[test]
    fn star_to_paw() {
        // paw: star centre 1 with leaves 2, 3, 4 plus the edge 2-3
        let paw = named::paw();
        assert_eq!(paw.edge_count(), 4);
        let perm = crate::matgraph::contains_subgraph(&paw, &Graph::star(3), crate::matgraph::SubgraphMode::Isomorphic).unwrap();
        let seed = DMatrix::from_fn(4, 4, |i, j| {
            let (a, b) = (perm.iter().position(|&v| v == i).unwrap(), perm.iter().position(|&v| v == j).unwrap());
            star()[(a, b)]
        });
        let r = lift_ssp(&LiftProblem::new(seed, paw.clone(), LiftMode::PreserveSpectrum)).unwrap();
        assert!(r.spectrum_error < 1e-8, "{}", r.spectrum_error);
        assert!(r.pattern_report.in_class);
        assert!(r.ssp_margin >= 10.0);
        assert!(r.path_log.iter().all(|s| s.residual <= DEFAULT_NEWTON_TOL));
        assert!((r.t_target - 0.1).abs() < 1e-15);
    }

    #[test]
    fn rejects_seed_without_ssp() {
        let id = DMatrix::<f64>::identity(3, 3);
        let err = lift_ssp(&LiftProblem::new(id, Graph::path(3), LiftMode::PreserveSpectrum)).unwrap_err();
        assert!(matches!(err, Error::RejectedSeed(_)));
    }

    #[test]
    fn edgeless_default_target() {
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, 1.5, 4.0]));
        assert!((default_t_target(&d) - 0.05).abs() < 1e-12);
    }
}
