//! Small named graphs used by the high-q characterization.

use super::Graph;

fn build(n: usize, one_based: &[(usize, usize)]) -> Graph {
    let edges: Vec<_> = one_based.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    Graph::from_edges(n, &edges).expect("static graph")
}

/// Two adjacent degree-3 vertices, each carrying two leaves.
pub fn h_tree() -> Graph {
    build(6, &[(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)])
}

/// Triangle 1-2-3 with two pendant vertices at 3.
pub fn campstool() -> Graph {
    build(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5)])
}

/// Vertex 1 with three legs of length two.
pub fn long_y_tree() -> Graph {
    build(7, &[(1, 2), (1, 4), (1, 6), (2, 3), (4, 5), (6, 7)])
}

/// Triangle 1-2-3 with one pendant at each triangle vertex.
pub fn three_sun() -> Graph {
    build(6, &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)])
}

/// `K_{1,3}` plus an edge between two leaves.
pub fn paw() -> Graph {
    build(4, &[(1, 2), (1, 3), (1, 4), (2, 3)])
}
