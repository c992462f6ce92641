//! Desk-scale exhaustive graph enumeration.

use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// All graphs on `n` vertices: every labeled graph, or one canonical
/// representative per isomorphism class when `up_to_isomorphism` is set.
///
/// Both streams are deterministic. Labeled graphs come in bitmask order over
/// the lexicographic pair list; representatives come sorted by canonical code.
pub fn enumerate_graphs(
    n: usize,
    up_to_isomorphism: bool,
) -> Result<Box<dyn Iterator<Item = Graph>>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::Resource(format!(
            "graph enumeration is limited to n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    if up_to_isomorphism {
        Ok(Box::new(nonisomorphic(n).into_iter()))
    } else {
        let pairs = pair_list(n);
        let total: u64 = 1 << pairs.len();
        Ok(Box::new((0..total).map(move |mask| from_mask(n, &pairs, mask))))
    }
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &edges).expect("pairs in range")
}

fn nonisomorphic(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let pairs = pair_list(n);
    let mut codes = BTreeSet::new();
    for base in nonisomorphic(n - 1) {
        for subset in 0u32..(1 << (n - 1)) {
            let mut g = Graph::empty(n);
            for (i, j) in base.edges() {
                g.add_edge(i, j).expect("in range");
            }
            for v in 0..n - 1 {
                if subset >> v & 1 == 1 {
                    g.add_edge(v, n - 1).expect("in range");
                }
            }
            codes.insert(canonical_code(&g));
        }
    }
    codes.into_iter().map(|c| from_mask(n, &pairs, c)).collect()
}

/// Smallest adjacency bitmask over all relabelings that respect a refined
/// vertex invariant. Two graphs are isomorphic iff their codes agree.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let inv: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    // cells of equal invariant, as ranges in `order`
    let mut cells = Vec::new();
    let mut start = 0;
    for k in 1..=n {
        if k == n || inv[order[k]] != inv[order[start]] {
            cells.push(start..k);
            start = k;
        }
    }
    let mut best = u64::MAX;
    let mut pos = vec![0usize; n];
    permute_cells(g, &mut order, &cells, 0, &mut pos, &mut best);
    best
}

fn permute_cells(
    g: &Graph,
    order: &mut [usize],
    cells: &[std::ops::Range<usize>],
    cell: usize,
    pos: &mut [usize],
    best: &mut u64,
) {
    if cell == cells.len() {
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let n = g.n();
        let mut code = 0u64;
        for (u, v) in g.edges() {
            let (a, b) = if pos[u] < pos[v] { (pos[u], pos[v]) } else { (pos[v], pos[u]) };
            code |= 1 << pair_index(n, a, b);
        }
        *best = (*best).min(code);
        return;
    }
    let range = cells[cell].clone();
    heap_permute(range.len(), &mut |slice_perm: &[usize]| {
        let original: Vec<usize> = range.clone().map(|k| order[k]).collect();
        for (k, &p) in slice_perm.iter().enumerate() {
            order[range.start + k] = original[p];
        }
        permute_cells(g, order, cells, cell + 1, pos, best);
        for (k, &v) in original.iter().enumerate() {
            order[range.start + k] = v;
        }
    });
}

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    // lexicographic index of (a, b), a < b
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// Calls `f` with every permutation of `0..k`.
fn heap_permute(k: usize, f: &mut dyn FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    f(&p);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgraph::is_isomorphic;

    #[test]
    fn counts() {
        assert_eq!(enumerate_graphs(2, false).unwrap().count(), 2);
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_graphs(4, true).unwrap().count(), 11);
        assert_eq!(enumerate_graphs(5, true).unwrap().count(), 34);
        assert!(matches!(enumerate_graphs(9, false), Err(Error::Resource(_))));
    }

    #[test]
    fn representatives_match_labeled_dedup() {
        // oracle: pairwise isomorphism tests over the labeled stream
        let mut classes: Vec<Graph> = Vec::new();
        for g in enumerate_graphs(4, false).unwrap() {
            if !classes.iter().any(|c| is_isomorphic(c, &g)) {
                classes.push(g);
            }
        }
        assert_eq!(classes.len(), 11);
        let reps: Vec<Graph> = enumerate_graphs(4, true).unwrap().collect();
        for c in &classes {
            assert_eq!(reps.iter().filter(|r| is_isomorphic(r, c)).count(), 1);
        }
    }

    #[test]
    fn pair_index_is_lexicographic() {
        let n = 5;
        for (k, (a, b)) in pair_list(n).into_iter().enumerate() {
            assert_eq!(pair_index(n, a, b), k);
        }
    }
}
