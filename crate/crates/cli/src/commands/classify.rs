use std::path::PathBuf;

use clap::Args;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use strongprops_core::matgraph::{HighQFamily, Obstruction};
use strongprops_core::qbounds::{classify_high_q, HighQClass, HighQReport};
use strongprops_core::Graph;

use crate::input::read_graph;
use crate::output::{Outcome, Run};

#[derive(Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Serialize, Deserialize)]
pub struct ClassifyBody {
    pub graph: Graph,
    pub report: HighQReport,
}

pub fn run(args: &ClassifyArgs) -> anyhow::Result<Run> {
    let g = read_graph(&args.graph)?;
    let report = classify_high_q(&g);
    let text = format!("{}\n", describe(&g, &report));
    Run::new("classify", Outcome::Proved, ClassifyBody { graph: g, report }, text)
}

fn family_name(f: HighQFamily) -> &'static str {
    match f {
        HighQFamily::Path => "path",
        HighQFamily::PathPlusIsolatedVertex => "path plus an isolated vertex",
        HighQFamily::PathWithInteriorLeaf => "path with a leaf on an interior vertex",
        HighQFamily::PathWithDistance2Chord => "path with a chord between vertices at distance 2",
        HighQFamily::None => "none",
    }
}

fn one_based(vs: &[usize]) -> String {
    vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn obstruction_text(o: &Obstruction) -> String {
    match o {
        Obstruction::Subgraph { graph, embedding } => format!("contains the {} on vertices {}", graph.name(), one_based(embedding)),
        Obstruction::DisjointPair { first, second, embedding } => {
            let k = first.graph().n();
            format!(
                "disjoint {:?} on {} and {:?} on {}",
                first,
                one_based(&embedding[..k]),
                second,
                one_based(&embedding[k..])
            )
        }
        Obstruction::Disconnected { components } => format!("{} components", components.len()),
        Obstruction::NonPathPlusIsolatedVertex { isolated } => {
            format!("isolated vertex {} beside a non-path", isolated + 1)
        }
        Obstruction::CutVertex { vertex, weight } => format!("cut vertex {} of weight {weight}", vertex + 1),
    }
}

pub fn describe(g: &Graph, r: &HighQReport) -> String {
    match r.class {
        HighQClass::QEqualsN if g.n() == 0 => "q = |G| (empty graph)".into(),
        HighQClass::QEqualsN => "q = |G| (path)".into(),
        HighQClass::QAtLeastNMinus1 => format!("q = |G| - 1 ({})", family_name(r.family)),
        HighQClass::QAtMostNMinus2 => match &r.obstruction {
            Some(o) => format!("q <= |G| - 2 ({})", obstruction_text(o)),
            None => "q <= |G| - 2".into(),
        },
    }
}

pub fn recheck(body: Value) -> anyhow::Result<Run> {
    let saved: ClassifyBody = serde_json::from_value(body)?;
    let fresh = classify_high_q(&saved.graph);
    let mut problems = Vec::new();
    if fresh.class != saved.report.class || fresh.family != saved.report.family {
        problems.push(format!(
            "recorded `{}`, recomputed `{}`",
            describe(&saved.graph, &saved.report),
            describe(&saved.graph, &fresh)
        ));
    }
    if let Some(o) = &saved.report.obstruction {
        if !o.holds_in(&saved.graph) {
            problems.push("recorded obstruction does not occur in the graph".into());
        }
    }
    let outcome = if problems.is_empty() { Outcome::Proved } else { Outcome::Refuted };
    let subject = format!("a graph on {} vertices", saved.graph.n());
    super::recheck::finish("classify", outcome, problems, &subject)
}
