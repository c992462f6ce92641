use std::path::PathBuf;

use anyhow::bail;
use clap::Args;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use strongprops_core::qbounds::{
    bound_report, brute_force_nullities, NullitySearchOptions, SourcedValue, MAX_NULLITY_SEARCH_ORDER,
};
use strongprops_core::{BoundReport, Graph, GraphParams};

use crate::input::{corpus, read_graph};
use crate::output::{Outcome, Run};

#[derive(Args)]
pub struct BoundsArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Maximum nullity M(G).
    #[arg(long)]
    max_nullity: Option<usize>,
    /// Positive semidefinite maximum nullity M+(G).
    #[arg(long)]
    psd_max_nullity: Option<usize>,
    /// Number of cliques needed to cover the vertices.
    #[arg(long)]
    clique_cover: Option<usize>,
    /// Search small integer matrices for M(G) and M+(G) when not supplied.
    #[arg(long)]
    search: bool,
}

#[derive(Serialize, Deserialize)]
pub struct BoundsBody {
    pub graph: Graph,
    pub params: GraphParams,
    pub report: BoundReport,
}

pub fn run(args: &BoundsArgs) -> anyhow::Result<Run> {
    let g = read_graph(&args.graph)?;
    let mut params = GraphParams {
        max_nullity: args.max_nullity.map(SourcedValue::user),
        psd_max_nullity: args.psd_max_nullity.map(SourcedValue::user),
        clique_cover_number: args.clique_cover.map(SourcedValue::user),
    };
    if args.search && (params.max_nullity.is_none() || params.psd_max_nullity.is_none()) {
        if g.n() > MAX_NULLITY_SEARCH_ORDER {
            bail!("--search handles at most {MAX_NULLITY_SEARCH_ORDER} vertices, the graph has {}", g.n());
        }
        let found = brute_force_nullities(&g, &NullitySearchOptions::default())?.to_params();
        params.max_nullity = params.max_nullity.or(found.max_nullity);
        params.psd_max_nullity = params.psd_max_nullity.or(found.psd_max_nullity);
    }
    let report = bound_report(&g, &params, &corpus()?)?;
    let text = render(&g, &report);
    Run::new("bounds", Outcome::Proved, BoundsBody { graph: g, params, report }, text)
}

fn render(g: &Graph, r: &BoundReport) -> String {
    let mut s = format!("q(G) for a graph on {} vertices with {} edges\n", g.n(), g.edge_count());
    if r.lower.value == r.upper.value {
        s.push_str(&format!("  q(G) = {}\n", r.lower.value));
    } else {
        s.push_str(&format!("  {} <= q(G) <= {}\n", r.lower.value, r.upper.value));
    }
    for (side, sign, bound) in [("lower", ">=", &r.lower), ("upper", "<=", &r.upper)] {
        s.push_str(&format!("{side} bound {}\n", bound.value));
        for j in &bound.rules {
            let tag = serde_json::to_value(&j.rule)
                .ok()
                .and_then(|v| v.get("rule").and_then(Value::as_str).map(str::to_string))
                .unwrap_or_default();
            s.push_str(&format!("  {sign} {:<3} {:<20} {}\n", j.value, tag, j.statement));
        }
    }
    s
}

pub fn recheck(body: Value) -> anyhow::Result<Run> {
    let saved: BoundsBody = serde_json::from_value(body)?;
    let all = corpus()?;
    let g = &saved.graph;
    let mut problems = Vec::new();
    for (side, bound, best) in [
        ("lower", &saved.report.lower, saved.report.lower.rules.iter().map(|j| j.value).max()),
        ("upper", &saved.report.upper, saved.report.upper.rules.iter().map(|j| j.value).min()),
    ] {
        if best != Some(bound.value) {
            problems.push(format!("{side} bound {} is not the best of its rules", bound.value));
        }
        for j in &bound.rules {
            if j.rule.value() != j.value || !j.rule.recheck(g, &all) {
                problems.push(format!("{side} rule `{}` with value {} does not replay", j.statement, j.value));
            }
        }
    }
    if saved.report.lower.value > saved.report.upper.value {
        problems.push("lower bound exceeds upper bound".into());
    }
    let outcome = if problems.is_empty() { Outcome::Proved } else { Outcome::Refuted };
    let subject = format!("a graph on {} vertices", g.n());
    super::recheck::finish("bounds", outcome, problems, &subject)
}
