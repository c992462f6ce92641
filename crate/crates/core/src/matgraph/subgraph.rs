//! Subgraph containment, identical or up to isomorphism.

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgraphMode {
    /// `E(H) ⊆ E(G)` under the same labels.
    Identical,
    /// Some injective vertex map carries `E(H)` into `E(G)`.
    Isomorphic,
}

/// Returns an embedding `h -> g` of `h` into `g` if one exists.
///
/// The containment is not induced: extra edges of `g` among the image are allowed.
pub fn contains_subgraph(g: &Graph, h: &Graph, mode: SubgraphMode) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    match mode {
        SubgraphMode::Identical => h.is_subgraph_of(g).then(|| (0..h.n()).collect()),
        SubgraphMode::Isomorphic => find_embedding(g, h),
    }
}

fn find_embedding(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.edge_count() > g.edge_count() {
        return None;
    }
    // Visit pattern vertices so each one (after the first in its component)
    // has an already-placed neighbour.
    let mut order = Vec::with_capacity(h.n());
    let mut placed = vec![false; h.n()];
    let mut by_degree: Vec<usize> = (0..h.n()).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    for &root in &by_degree {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        let mut k = order.len();
        order.push(root);
        while k < order.len() {
            let v = order[k];
            k += 1;
            let mut nb: Vec<usize> = h.neighbors(v).filter(|&w| !placed[w]).collect();
            nb.sort_by_key(|&w| std::cmp::Reverse(h.degree(w)));
            for w in nb {
                placed[w] = true;
                order.push(w);
            }
        }
    }
    let mut map = vec![usize::MAX; h.n()];
    let mut used = vec![false; g.n()];
    if extend(g, h, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for cand in 0..g.n() {
        if used[cand] || g.degree(cand) < h.degree(v) {
            continue;
        }
        let consistent = h
            .neighbors(v)
            .all(|w| map[w] == usize::MAX || g.has_edge(cand, map[w]));
        if !consistent {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        if extend(g, h, order, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[cand] = false;
    }
    false
}

/// Whether `a` and `b` are isomorphic.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && find_embedding(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_containment() {
        let g = Graph::cycle(5);
        assert_eq!(contains_subgraph(&g, &g, SubgraphMode::Identical), Some(vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn cycle_contents() {
        let c6 = Graph::cycle(6);
        let emb = contains_subgraph(&c6, &Graph::path(4), SubgraphMode::Isomorphic).unwrap();
        for (i, j) in Graph::path(4).edges() {
            assert!(c6.has_edge(emb[i], emb[j]));
        }
        assert!(contains_subgraph(&c6, &Graph::complete(3), SubgraphMode::Isomorphic).is_none());
    }

    #[test]
    fn identical_is_stronger() {
        // relabelled P3 is isomorphic but not identically contained
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let h = Graph::from_edges(3, &[(0, 2)]).unwrap();
        assert!(contains_subgraph(&g, &h, SubgraphMode::Identical).is_none());
        assert!(contains_subgraph(&g, &h, SubgraphMode::Isomorphic).is_some());
    }
}
