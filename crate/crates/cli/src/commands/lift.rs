use std::path::PathBuf;

use anyhow::bail;
use clap::{Args, ValueEnum};
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use strongprops_core::lifting::{augment_and_lift, lift};
use strongprops_core::matgraph::{contains_subgraph, matches_pattern, SubgraphMode};
use strongprops_core::spectra::{eig_cluster, DEFAULT_CLUSTER_TOL};
use strongprops_core::strongprops::{verify, VerifyOptions};
use strongprops_core::{Certificate, Error, Graph, LiftMode, LiftProblem, LiftResult, PathStep, Property, SymMatrix};

use crate::input::{read_certificate, read_graph};
use crate::output::{Outcome, Run, MIN_FLOAT_MARGIN};

/// Largest eigenvalue drift accepted when re-checking a spectrum-preserving lift.
const RECHECK_SPECTRUM_TOL: f64 = 1e-8;

#[derive(Args)]
pub struct LiftArgs {
    /// `corpus:<id>` or a certificate JSON file.
    #[arg(long)]
    seed: String,
    /// Target graph; its first vertices carry the seed when it is larger.
    #[arg(long)]
    supergraph: PathBuf,
    /// What the lift keeps fixed; defaults to the strongest claimed property.
    #[arg(long, value_enum)]
    mode: Option<LiftModeArg>,
    /// Value of the new entries.
    #[arg(long)]
    t_target: Option<f64>,
    /// Continuation steps.
    #[arg(long)]
    steps: Option<usize>,
    /// Newton residual tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Eigenvalues for the vertices the supergraph adds, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    extra: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LiftModeArg {
    Spectrum,
    Multiplicity,
}

impl From<LiftModeArg> for LiftMode {
    fn from(m: LiftModeArg) -> LiftMode {
        match m {
            LiftModeArg::Spectrum => LiftMode::PreserveSpectrum,
            LiftModeArg::Multiplicity => LiftMode::PreserveMultiplicityList,
        }
    }
}

/// Spectral data the lifted matrix must reproduce.
#[derive(Serialize, Deserialize)]
pub struct Target {
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
pub struct LiftBody {
    pub seed_source: String,
    pub seed: SymMatrix,
    pub supergraph: Graph,
    pub extra: Vec<f64>,
    pub target: Target,
    pub result: Option<LiftResult>,
    pub error: Option<String>,
    pub path_log: Vec<PathStep>,
}

fn claimed_mode(c: &Certificate) -> Option<LiftMode> {
    if c.claims_property(Property::Ssp) == Some(true) {
        Some(LiftMode::PreserveSpectrum)
    } else if c.claims_property(Property::Smp) == Some(true) {
        Some(LiftMode::PreserveMultiplicityList)
    } else {
        None
    }
}

fn target(c: &Certificate, extra: &[f64]) -> anyhow::Result<Target> {
    let a = c.matrix.to_f64();
    let n = a.nrows();
    let m = n + extra.len();
    let block = DMatrix::from_fn(m, m, |i, j| match (i < n && j < n, i == j) {
        (true, _) => a[(i, j)],
        (false, true) => extra[i - n],
        (false, false) => 0.0,
    });
    let s = eig_cluster(&block, DEFAULT_CLUSTER_TOL)?;
    Ok(Target { eigenvalues: s.raw_eigenvalues, multiplicities: s.multiplicities })
}

pub fn run(args: &LiftArgs) -> anyhow::Result<Run> {
    let cert = read_certificate(&args.seed)?;
    let g = read_graph(&args.supergraph)?;
    let (n, m) = (cert.n(), g.n());
    if m < n {
        bail!("the supergraph has {m} vertices, fewer than the seed's {n}");
    }
    if args.extra.len() != m - n {
        bail!("a {n}-vertex seed in a {m}-vertex supergraph needs {} values in --extra, got {}", m - n, args.extra.len());
    }
    let claimed = claimed_mode(&cert);
    let attempt = if m == n {
        let mode = match (args.mode, claimed) {
            (Some(arg), _) => arg.into(),
            (None, Some(mode)) => mode,
            (None, None) => bail!("{} claims neither the SSP nor the SMP; pass --mode", args.seed),
        };
        let mut problem = LiftProblem::new(cert.matrix.to_f64(), g.clone(), mode);
        problem.t_target = args.t_target;
        if let Some(s) = args.steps {
            problem.steps = s;
        }
        if let Some(t) = args.tol {
            problem.newton_tol = t;
        }
        lift(&problem)
    } else {
        if args.t_target.is_some() || args.steps.is_some() || args.tol.is_some() {
            bail!("--t-target, --steps and --tol apply only when the supergraph has the seed's order");
        }
        if let (Some(arg), Some(mode)) = (args.mode, claimed) {
            if LiftMode::from(arg) != mode {
                bail!("augmented lifts use the certificate's strongest claim ({mode:?})");
            }
        }
        let embedding = contains_subgraph(&g, &cert.graph, SubgraphMode::Identical)
            .or_else(|| contains_subgraph(&g, &cert.graph, SubgraphMode::Isomorphic))
            .ok_or_else(|| anyhow::anyhow!("the seed graph does not embed in the supergraph"))?;
        augment_and_lift(&cert, &g, &embedding, &args.extra)
    };
    let mut body = LiftBody {
        seed_source: args.seed.clone(),
        seed: cert.sym(),
        supergraph: g,
        extra: args.extra.clone(),
        target: target(&cert, &args.extra)?,
        result: None,
        error: None,
        path_log: Vec::new(),
    };
    let outcome = match attempt {
        Ok(r) => {
            body.path_log = r.path_log.clone();
            body.result = Some(r);
            Outcome::Proved
        }
        Err(e @ (Error::Continuation { .. } | Error::RejectedSeed(_) | Error::LiftIntegrity(_))) => {
            if let Error::Continuation { path_log, .. } = &e {
                body.path_log = path_log.clone();
            }
            body.error = Some(e.to_string());
            Outcome::Inconclusive
        }
        Err(e) => return Err(e.into()),
    };
    let text = render(&body);
    Run::new("lift", outcome, body, text)
}

fn render(body: &LiftBody) -> String {
    match (&body.result, &body.error) {
        (Some(r), _) => {
            let mut s = format!(
                "lifted {} to a graph on {} vertices with {} edges ({:?}, t = {:.3e})\n",
                body.seed_source,
                body.supergraph.n(),
                body.supergraph.edge_count(),
                r.mode,
                r.t_target
            );
            s.push_str(&format!(
                "  spectrum drift {:.3e}, rank margin {:.3e}, smallest seed-edge entry {:.3e}, {} continuation steps\n",
                r.spectrum_error,
                r.ssp_margin,
                r.min_seed_edge_entry,
                r.path_log.len()
            ));
            s.push_str(&crate::output::matrix_rows(&r.b));
            s
        }
        (None, Some(e)) => format!("lift of {} is inconclusive: {e}\n", body.seed_source),
        (None, None) => String::new(),
    }
}

pub fn recheck(body: Value) -> anyhow::Result<Run> {
    let saved: LiftBody = serde_json::from_value(body)?;
    let Some(r) = &saved.result else {
        return super::recheck::finish("lift", Outcome::Inconclusive, Vec::new(), &saved.seed_source);
    };
    let g = &saved.supergraph;
    let mut problems = Vec::new();
    let pattern = matches_pattern(&r.b, g, strongprops_core::lifting::DEFAULT_NEWTON_TOL);
    if !pattern.in_class {
        problems.push(format!("lifted matrix leaves the pattern at {} position(s)", pattern.violations.len()));
    }
    let property = r.mode.property();
    let check = verify(property, &r.b, g, &VerifyOptions::default())?;
    if !check.verdict {
        problems.push(format!("lifted matrix fails the {property}"));
    }
    let s = eig_cluster(&r.b.to_f64(), DEFAULT_CLUSTER_TOL)?;
    match r.mode {
        LiftMode::PreserveSpectrum => {
            let drift = s
                .raw_eigenvalues
                .iter()
                .zip(&saved.target.eigenvalues)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            if drift > RECHECK_SPECTRUM_TOL || s.raw_eigenvalues.len() != saved.target.eigenvalues.len() {
                problems.push(format!("spectrum drifted by {drift:.3e}"));
            }
        }
        LiftMode::PreserveMultiplicityList => {
            if s.multiplicities != saved.target.multiplicities {
                problems.push(format!(
                    "multiplicity list {:?}, expected {:?}",
                    s.multiplicities, saved.target.multiplicities
                ));
            }
        }
    }
    let outcome = if !problems.is_empty() {
        Outcome::Refuted
    } else if check.margin.unwrap_or(0.0) < MIN_FLOAT_MARGIN {
        Outcome::Inconclusive
    } else {
        Outcome::Proved
    };
    super::recheck::finish("lift", outcome, problems, &saved.seed_source)
}
