use serde::{Deserialize, Serialize};

use crate::matgraph::{find_obstruction, recognize_high_q_family, Graph, HighQFamily, Obstruction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HighQClass {
    #[serde(rename = "q_equals_n")]
    QEqualsN,
    #[serde(rename = "q_at_least_n_minus_1")]
    QAtLeastNMinus1,
    #[serde(rename = "q_at_most_n_minus_2")]
    QAtMostNMinus2,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HighQReport {
    pub class: HighQClass,
    pub family: HighQFamily,
    /// Present exactly when `class` is `QAtMostNMinus2`.
    pub obstruction: Option<Obstruction>,
}

/// Places `q(g)` relative to `|G|`: paths have `q = n`, the four families
/// have `q >= n - 1`, and every other graph has `q <= n - 2`, shown by an
/// obstruction found by the independent search.
pub fn classify_high_q(g: &Graph) -> HighQReport {
    let family = recognize_high_q_family(g);
    let class = match family {
        _ if g.n() == 0 => HighQClass::QEqualsN,
        HighQFamily::Path => HighQClass::QEqualsN,
        HighQFamily::None => HighQClass::QAtMostNMinus2,
        _ => HighQClass::QAtLeastNMinus1,
    };
    let obstruction = match class {
        HighQClass::QAtMostNMinus2 => find_obstruction(g),
        _ => None,
    };
    HighQReport { class, family, obstruction }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(classify_high_q(&Graph::path(6)).class, HighQClass::QEqualsN);
        let mut chord = Graph::path(5);
        chord.add_edge(1, 3).unwrap();
        let r = classify_high_q(&chord);
        assert_eq!(r.class, HighQClass::QAtLeastNMinus1);
        assert_eq!(r.family, HighQFamily::PathWithDistance2Chord);
        let r = classify_high_q(&Graph::cycle(5));
        assert_eq!(r.class, HighQClass::QAtMostNMinus2);
        let obstruction = r.obstruction.unwrap();
        assert!(matches!(obstruction, Obstruction::Subgraph { .. }));
        assert!(obstruction.holds_in(&Graph::cycle(5)));
        let text = serde_json::to_string(&r.class).unwrap();
        assert_eq!(text, "\"q_at_most_n_minus_2\"");
    }
}
