//! Lower and upper bounds on the minimum number of distinct eigenvalues
//! `q(G)`, each backed by a replayable justification.

mod classify;
mod lower;
mod nullity;
mod upper;

use serde::{Deserialize, Serialize};

use crate::constructs::Certificate;
use crate::error::{Error, Result};
use crate::matgraph::{Graph, Obstruction};
use crate::strongprops::Property;

pub use classify::{classify_high_q, HighQClass, HighQReport};
pub use lower::q_lower;
pub use nullity::{brute_force_nullities, NullitySearch, NullitySearchOptions, MAX_NULLITY_SEARCH_ORDER};
pub use upper::{clique_cover, longest_cycle, q_upper, q_upper_with_cap, DEFAULT_CYCLE_CAP, MAX_CLIQUE_COVER_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParamSource {
    UserSupplied,
    /// Maximum found by a finite search; a lower bound on the true value.
    BruteForced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourcedValue {
    pub value: usize,
    pub source: ParamSource,
}

impl SourcedValue {
    pub fn user(value: usize) -> Self {
        SourcedValue { value, source: ParamSource::UserSupplied }
    }
}

/// Graph parameters that feed the bounds. `None` means unknown.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphParams {
    /// `M(G)`, the maximum nullity over `S(G)`.
    pub max_nullity: Option<SourcedValue>,
    /// `M+(G)`, the maximum nullity over positive semidefinite members.
    pub psd_max_nullity: Option<SourcedValue>,
    /// Minimum number of cliques covering the vertices.
    pub clique_cover_number: Option<SourcedValue>,
}

impl GraphParams {
    /// Checks `1 <= M+ <= M <= n` and `1 <= clique cover <= n` for the
    /// values present.
    pub fn validate(&self, n: usize) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidField(format!("graph parameters: {what}")));
        if let Some(m) = self.max_nullity {
            if m.value == 0 || m.value > n {
                return bad("M must satisfy 1 <= M <= n");
            }
        }
        if let Some(mp) = self.psd_max_nullity {
            if mp.value == 0 || mp.value > n {
                return bad("M+ must satisfy 1 <= M+ <= n");
            }
            if self.max_nullity.is_some_and(|m| mp.value > m.value) {
                return bad("M+ exceeds M");
            }
        }
        if let Some(c) = self.clique_cover_number {
            if c.value == 0 || c.value > n {
                return bad("clique cover number must satisfy 1 <= k <= n");
            }
        }
        Ok(())
    }
}

/// The rule behind one bound, with every number it uses.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Rule {
    /// `q = 1` iff there are no edges.
    EdgeCount { edges: usize },
    /// `q >= ceil(n / M)`.
    MaxNullity { n: usize, max_nullity: usize },
    /// `q >= 2 + ceil((n - 2 M+) / M)`: the extreme eigenvalues have
    /// multiplicity at most `M+`.
    PsdNullity { n: usize, max_nullity: usize, psd_max_nullity: usize },
    /// `q >= 3` when `2 M+ < n`.
    PsdHalf { n: usize, psd_max_nullity: usize },
    /// `q <= n`: every graph has a realization with distinct eigenvalues.
    Order { n: usize },
    /// `q <= max |G_i|` over the components.
    Components { sizes: Vec<usize> },
    /// `q <= m - |H| + q(H)` for a certificate on `H` with the SSP or the
    /// SMP embedded in `G`; `embedding[v]` is the image of vertex `v`.
    CertificateLift {
        id: String,
        property: Property,
        certificate_order: usize,
        certificate_q: usize,
        order: usize,
        #[serde(with = "crate::report::one_based")]
        embedding: Vec<usize>,
    },
    /// `q <= n - floor(k/2)` for a cycle of length `k`.
    LongestCycle {
        n: usize,
        #[serde(with = "crate::report::one_based")]
        cycle: Vec<usize>,
    },
    /// `q <= n - 2` from two vertex-disjoint `K3`/`K_{1,3}` pieces.
    DisjointPair { n: usize, obstruction: Obstruction },
    /// `q <= n - 2` from a structure excluding the families with `q >= n - 1`.
    HighQObstruction { n: usize, obstruction: Obstruction },
    /// `q <= 2k` for `k` cliques covering the vertices. `cliques` is absent
    /// when `k` was supplied by the caller.
    CliqueCover {
        cover_number: usize,
        source: ParamSource,
        #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_one_based")]
        cliques: Option<Vec<Vec<usize>>>,
    },
}

mod opt_one_based {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Vec<Vec<usize>>>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref()
            .map(|cs| cs.iter().map(|c| c.iter().map(|x| x + 1).collect::<Vec<_>>()).collect::<Vec<_>>())
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Vec<usize>>>, D::Error> {
        let raw = Option::<Vec<Vec<usize>>>::deserialize(d)?;
        raw.map(|cs| {
            cs.into_iter()
                .map(|c| {
                    c.into_iter()
                        .map(|x| x.checked_sub(1).ok_or_else(|| serde::de::Error::custom("vertex labels are 1-based")))
                        .collect()
                })
                .collect()
        })
        .transpose()
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) == (b < 0)) {
        q + 1
    } else {
        q
    }
}

impl Rule {
    /// The bound this rule yields, from its numbers alone.
    pub fn value(&self) -> usize {
        match self {
            Rule::EdgeCount { edges } => {
                if *edges == 0 {
                    1
                } else {
                    2
                }
            }
            Rule::MaxNullity { n, max_nullity } => n.div_ceil(*max_nullity),
            Rule::PsdNullity { n, max_nullity, psd_max_nullity } => {
                let v = 2 + ceil_div(*n as i64 - 2 * *psd_max_nullity as i64, *max_nullity as i64);
                v.max(0) as usize
            }
            Rule::PsdHalf { .. } => 3,
            Rule::Order { n } => *n,
            Rule::Components { sizes } => sizes.iter().copied().max().unwrap_or(0),
            Rule::CertificateLift { certificate_order, certificate_q, order, .. } => {
                order - certificate_order + certificate_q
            }
            Rule::LongestCycle { n, cycle } => n - cycle.len() / 2,
            Rule::DisjointPair { n, .. } | Rule::HighQObstruction { n, .. } => n - 2,
            Rule::CliqueCover { cover_number, .. } => 2 * cover_number,
        }
    }

    pub fn statement(&self) -> &'static str {
        match self {
            Rule::EdgeCount { .. } => "q(G) = 1 iff G has no edges",
            Rule::MaxNullity { .. } => "q(G) >= ceil(n / M(G))",
            Rule::PsdNullity { .. } => "q(G) >= 2 + ceil((n - 2 M+(G)) / M(G))",
            Rule::PsdHalf { .. } => "q(G) >= 3 when M+(G) < n/2",
            Rule::Order { .. } => "q(G) <= |G|",
            Rule::Components { .. } => "q(G) <= max |G_i| over components",
            Rule::CertificateLift { .. } => "q(G) <= |G| - |H| + q(H) for an SSP/SMP realization on a subgraph H",
            Rule::LongestCycle { .. } => "q(G) <= |G| - floor(k/2) for a k-cycle in G",
            Rule::DisjointPair { .. } => "q(G) <= |G| - 2 for two disjoint K3/K13 subgraphs",
            Rule::HighQObstruction { .. } => "q(G) <= |G| - 2 for a graph outside the q >= |G| - 1 families",
            Rule::CliqueCover { .. } => "q(G) <= 2 * (clique cover number)",
        }
    }

    /// Replays the rule against `g`: numbers must match the graph and
    /// every witness must be present in it.
    pub fn recheck(&self, g: &Graph, corpus: &[Certificate]) -> bool {
        let n = g.n();
        match self {
            Rule::EdgeCount { edges } => *edges == g.edge_count(),
            Rule::MaxNullity { n: m, max_nullity } => *m == n && *max_nullity >= 1,
            Rule::PsdNullity { n: m, max_nullity, psd_max_nullity } => {
                *m == n && *max_nullity >= 1 && psd_max_nullity <= max_nullity
            }
            Rule::PsdHalf { n: m, psd_max_nullity } => *m == n && 2 * psd_max_nullity < n,
            Rule::Order { n: m } => *m == n,
            Rule::Components { sizes } => {
                let mut actual: Vec<usize> = g.components().iter().map(Vec::len).collect();
                let mut claimed = sizes.clone();
                actual.sort_unstable();
                claimed.sort_unstable();
                actual.len() >= 2 && actual == claimed
            }
            Rule::CertificateLift { id, property, certificate_order, certificate_q, order, embedding } => {
                let Some(c) = corpus.iter().find(|c| &c.id == id) else { return false };
                *order == n
                    && c.n() == *certificate_order
                    && c.q() == Some(*certificate_q)
                    && c.claims_property(*property) == Some(true)
                    && embeds(g, &c.graph, embedding)
            }
            Rule::LongestCycle { n: m, cycle } => {
                *m == n
                    && cycle.len() >= 3
                    && embeds(g, &Graph::cycle(cycle.len()), cycle)
            }
            Rule::DisjointPair { n: m, obstruction } => {
                *m == n && matches!(obstruction, Obstruction::DisjointPair { .. }) && obstruction.holds_in(g)
            }
            Rule::HighQObstruction { n: m, obstruction } => *m == n && obstruction.holds_in(g),
            Rule::CliqueCover { cover_number, cliques, .. } => match cliques {
                None => *cover_number >= 1,
                Some(cs) => {
                    let mut covered = vec![false; n];
                    for c in cs {
                        for (k, &u) in c.iter().enumerate() {
                            if u >= n || covered[u] || c[..k].iter().any(|&v| !g.has_edge(u, v)) {
                                return false;
                            }
                            covered[u] = true;
                        }
                    }
                    cs.len() == *cover_number && covered.iter().all(|&b| b)
                }
            },
        }
    }
}

fn embeds(g: &Graph, h: &Graph, emb: &[usize]) -> bool {
    if emb.len() != h.n() || emb.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in emb {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    h.edges().iter().all(|&(i, j)| g.has_edge(emb[i], emb[j]))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Justification {
    #[serde(flatten)]
    pub rule: Rule,
    pub value: usize,
    pub statement: String,
}

impl From<Rule> for Justification {
    fn from(rule: Rule) -> Self {
        Justification { value: rule.value(), statement: rule.statement().into(), rule }
    }
}

/// A bound and the rules that support it; `value` is the best of them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bound {
    pub value: usize,
    pub rules: Vec<Justification>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub lower: Bound,
    pub upper: Bound,
}

/// Both bounds for `g`.
pub fn bound_report(g: &Graph, params: &GraphParams, corpus: &[Certificate]) -> Result<BoundReport> {
    Ok(BoundReport {
        lower: q_lower(g, params)?,
        upper: q_upper(g, corpus, params)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_div_signs() {
        assert_eq!(ceil_div(3, 2), 2);
        assert_eq!(ceil_div(-3, 2), -1);
        assert_eq!(ceil_div(4, 2), 2);
        assert_eq!(ceil_div(0, 5), 0);
    }

    #[test]
    fn params_are_validated() {
        let p = GraphParams {
            max_nullity: Some(SourcedValue::user(1)),
            psd_max_nullity: Some(SourcedValue::user(2)),
            clique_cover_number: None,
        };
        assert!(p.validate(4).is_err());
        assert!(GraphParams::default().validate(0).is_ok());
    }

    #[test]
    fn rule_json_is_tagged() {
        let j = Justification::from(Rule::LongestCycle { n: 8, cycle: vec![0, 1, 2, 3, 4, 5] });
        assert_eq!(j.value, 5);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"rule\":\"longest-cycle\""));
        assert!(text.contains("[1,2,3,4,5,6]"));
        let back: Justification = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
    }
}
