use super::{Bound, GraphParams, Justification, Rule};
use crate::error::Result;
use crate::matgraph::Graph;

/// Best lower bound on `q(g)` from the edge count and the nullity
/// parameters that are present.
pub fn q_lower(g: &Graph, params: &GraphParams) -> Result<Bound> {
    let n = g.n();
    params.validate(n)?;
    let mut rules = vec![Rule::EdgeCount { edges: g.edge_count() }];
    if let Some(m) = params.max_nullity {
        rules.push(Rule::MaxNullity { n, max_nullity: m.value });
        if let Some(mp) = params.psd_max_nullity {
            rules.push(Rule::PsdNullity { n, max_nullity: m.value, psd_max_nullity: mp.value });
        }
    }
    if let Some(mp) = params.psd_max_nullity {
        if 2 * mp.value < n {
            rules.push(Rule::PsdHalf { n, psd_max_nullity: mp.value });
        }
    }
    let rules: Vec<Justification> = rules.into_iter().map(Justification::from).collect();
    let value = rules.iter().map(|j| j.value).max().unwrap_or(1);
    Ok(Bound { value, rules })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbounds::SourcedValue;

    #[test]
    fn edge_count_only() {
        assert_eq!(q_lower(&Graph::empty(5), &GraphParams::default()).unwrap().value, 1);
        assert_eq!(q_lower(&Graph::path(5), &GraphParams::default()).unwrap().value, 2);
    }

    #[test]
    fn star_with_nullities() {
        let params = GraphParams {
            max_nullity: Some(SourcedValue::user(2)),
            psd_max_nullity: Some(SourcedValue::user(1)),
            clique_cover_number: None,
        };
        let b = q_lower(&Graph::star(3), &params).unwrap();
        assert_eq!(b.value, 3);
        assert!(b.rules.iter().all(|j| j.rule.recheck(&Graph::star(3), &[])));
    }

    #[test]
    fn paths_with_unit_nullity() {
        for n in 1..8 {
            let params = GraphParams { max_nullity: Some(SourcedValue::user(1)), ..Default::default() };
            assert_eq!(q_lower(&Graph::path(n), &params).unwrap().value, n);
        }
    }
}
