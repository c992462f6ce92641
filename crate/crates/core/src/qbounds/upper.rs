use super::{Bound, GraphParams, Justification, ParamSource, Rule};
use crate::constructs::Certificate;
use crate::error::Result;
use crate::matgraph::{contains_subgraph, find_disjoint_pair, find_obstruction, recognize_high_q_family, Graph, HighQFamily, SubgraphMode};
use crate::strongprops::Property;

/// Longest cycle length searched by default.
pub const DEFAULT_CYCLE_CAP: usize = 12;

/// Largest order for which the clique cover number is computed.
pub const MAX_CLIQUE_COVER_ORDER: usize = 10;

/// [`q_upper_with_cap`] with [`DEFAULT_CYCLE_CAP`].
pub fn q_upper(g: &Graph, corpus: &[Certificate], params: &GraphParams) -> Result<Bound> {
    q_upper_with_cap(g, corpus, params, DEFAULT_CYCLE_CAP)
}

/// Best upper bound on `q(g)` over the order, component sizes, embedded
/// certificates, the longest cycle of length at most `cycle_cap`,
/// disjoint `K3`/`K_{1,3}` pairs, the forbidden structures and the clique
/// cover number.
pub fn q_upper_with_cap(g: &Graph, corpus: &[Certificate], params: &GraphParams, cycle_cap: usize) -> Result<Bound> {
    let n = g.n();
    params.validate(n)?;
    let mut rules = vec![Rule::Order { n }];

    let comps = g.components();
    if comps.len() >= 2 {
        rules.push(Rule::Components { sizes: comps.iter().map(Vec::len).collect() });
    }

    for c in corpus {
        let Some(q) = c.q() else { continue };
        let Some(property) = [Property::Ssp, Property::Smp]
            .into_iter()
            .find(|&p| c.claims_property(p) == Some(true))
        else {
            continue;
        };
        if c.n() > n || c.graph.edge_count() > g.edge_count() {
            continue;
        }
        if let Some(embedding) = contains_subgraph(g, &c.graph, SubgraphMode::Isomorphic) {
            rules.push(Rule::CertificateLift {
                id: c.id.clone(),
                property,
                certificate_order: c.n(),
                certificate_q: q,
                order: n,
                embedding,
            });
        }
    }

    if let Some(cycle) = longest_cycle(g, cycle_cap) {
        rules.push(Rule::LongestCycle { n, cycle });
    }
    if let Some(obstruction) = find_disjoint_pair(g) {
        rules.push(Rule::DisjointPair { n, obstruction });
    }
    if recognize_high_q_family(g) == HighQFamily::None {
        if let Some(obstruction) = find_obstruction(g) {
            rules.push(Rule::HighQObstruction { n, obstruction });
        }
    }

    match params.clique_cover_number {
        Some(k) => rules.push(Rule::CliqueCover { cover_number: k.value, source: k.source, cliques: None }),
        None if n <= MAX_CLIQUE_COVER_ORDER && n > 0 => {
            let cliques = clique_cover(g);
            rules.push(Rule::CliqueCover {
                cover_number: cliques.len(),
                source: ParamSource::BruteForced,
                cliques: Some(cliques),
            });
        }
        None => {}
    }

    let rules: Vec<Justification> = rules.into_iter().map(Justification::from).collect();
    let value = rules.iter().map(|j| j.value).min().unwrap_or(n);
    Ok(Bound { value, rules })
}

/// A longest cycle with at most `cap` vertices, as a vertex sequence, or
/// `None` if `g` has no cycle within the cap. Exhaustive backtracking.
pub fn longest_cycle(g: &Graph, cap: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let cap = cap.min(n);
    let mut best: Option<Vec<usize>> = None;
    let mut path = Vec::with_capacity(cap);
    let mut used = vec![false; n];
    for start in 0..n {
        path.push(start);
        used[start] = true;
        extend_cycle(g, start, cap, &mut path, &mut used, &mut best);
        used[start] = false;
        path.pop();
        if best.as_ref().is_some_and(|b| b.len() == cap) {
            break;
        }
    }
    best
}

fn extend_cycle(
    g: &Graph,
    start: usize,
    cap: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut Option<Vec<usize>>,
) {
    let last = *path.last().expect("nonempty path");
    if path.len() >= 3 && g.has_edge(last, start) && best.as_ref().is_none_or(|b| b.len() < path.len()) {
        *best = Some(path.clone());
    }
    if path.len() == cap || best.as_ref().is_some_and(|b| b.len() == cap) {
        return;
    }
    // start is the smallest vertex of the cycle
    let next: Vec<usize> = g.neighbors(last).filter(|&v| v > start && !used[v]).collect();
    for v in next {
        used[v] = true;
        path.push(v);
        extend_cycle(g, start, cap, path, used, best);
        path.pop();
        used[v] = false;
    }
}

/// A minimum set of cliques covering every vertex, found by exhaustive
/// colouring of the complement.
pub fn clique_cover(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let comp = g.complement();
    // vertices in decreasing complement degree
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(comp.degree(v)));
    for k in 1..=n {
        let mut colour = vec![usize::MAX; n];
        if colour_with(&comp, &order, 0, k, &mut colour) {
            let mut classes = vec![Vec::new(); k];
            for v in 0..n {
                classes[colour[v]].push(v);
            }
            classes.retain(|c| !c.is_empty());
            return classes;
        }
    }
    Vec::new()
}

fn colour_with(comp: &Graph, order: &[usize], idx: usize, k: usize, colour: &mut [usize]) -> bool {
    let Some(&v) = order.get(idx) else { return true };
    let used_max = order[..idx].iter().map(|&u| colour[u] + 1).max().unwrap_or(0);
    // a fresh colour beyond the first unused one is symmetric to it
    for c in 0..k.min(used_max + 1) {
        if comp.neighbors(v).all(|u| colour[u] != c) {
            colour[v] = c;
            if colour_with(comp, order, idx + 1, k, colour) {
                return true;
            }
            colour[v] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructs::{corpus, flipped_cycle};
    use crate::matgraph::named;

    #[test]
    fn cycles() {
        assert_eq!(longest_cycle(&Graph::path(6), 12), None);
        assert_eq!(longest_cycle(&Graph::cycle(7), 12).unwrap().len(), 7);
        assert_eq!(longest_cycle(&Graph::cycle(7), 5), None);
        assert_eq!(longest_cycle(&Graph::complete(6), 4).unwrap().len(), 4);
    }

    #[test]
    fn covers() {
        assert_eq!(clique_cover(&Graph::complete(4)).len(), 1);
        assert_eq!(clique_cover(&Graph::empty(4)).len(), 4);
        assert_eq!(clique_cover(&Graph::cycle(5)).len(), 3);
        assert_eq!(clique_cover(&Graph::path(4)).len(), 2);
    }

    #[test]
    fn three_sun_via_certificate() {
        let g = named::three_sun();
        let b = q_upper(&g, &corpus().unwrap(), &GraphParams::default()).unwrap();
        assert_eq!(b.value, 4);
        assert!(b.rules.iter().any(|j| matches!(&j.rule, Rule::CertificateLift { id, .. } if id == "prop:HHY3/A4") && j.value == 4));
    }

    #[test]
    fn six_cycle_inside_eight_vertices() {
        let mut g = Graph::cycle(6).disjoint_union(&Graph::path(2));
        g.add_edge(5, 6).unwrap();
        let b = q_upper(&g, &[], &GraphParams::default()).unwrap();
        let cyc = b.rules.iter().find(|j| matches!(j.rule, Rule::LongestCycle { .. })).unwrap();
        assert_eq!(cyc.value, 5);
        assert!(b.value <= 5);
        let c6 = flipped_cycle(6).unwrap();
        let b = q_upper(&g, &[c6], &GraphParams::default()).unwrap();
        assert!(b.rules.iter().any(|j| matches!(j.rule, Rule::CertificateLift { .. }) && j.value == 5));
    }

    #[test]
    fn every_rule_replays() {
        let all = corpus().unwrap();
        for g in [named::h_tree(), named::campstool(), Graph::cycle(5), Graph::star(3).disjoint_union(&Graph::complete(3))] {
            let b = q_upper(&g, &all, &GraphParams::default()).unwrap();
            for j in &b.rules {
                assert!(j.rule.recheck(&g, &all), "{:?}", j.rule);
            }
        }
    }
}
