use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Vertices are 0-based in the API; the file formats and reports use the
/// conventional 1-based labels. JSON form: `{"n": N, "edges": [[1, 2], ...]}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        let n = self.n();
        if i == j {
            return Err(Error::Shape(format!("loop at vertex {}", i + 1)));
        }
        if i >= n || j >= n {
            return Err(Error::Shape(format!(
                "edge {{{}, {}}} out of range for {n} vertices",
                i + 1,
                j + 1
            )));
        }
        self.adj[i].insert(j);
        self.adj[j].insert(i);
        Ok(())
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        self.adj[i].remove(&j);
        self.adj[j].remove(&i);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(&j)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|i| self.adj[i].range(i + 1..).map(move |&j| (i, j)))
            .collect()
    }

    /// Non-adjacent pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.has_edge(i, j))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for (i, j) in self.non_edges() {
            g.adj[i].insert(j);
            g.adj[j].insert(i);
        }
        g
    }

    /// `E(self) ⊆ E(other)` on the same labels.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n() <= other.n() && self.edges().iter().all(|&(i, j)| other.has_edge(i, j))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                k += 1;
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (k, &v) in vertices.iter().enumerate() {
            pos[v] = k;
        }
        let mut g = Graph::empty(vertices.len());
        for (k, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                if pos[w] != usize::MAX {
                    g.adj[k].insert(pos[w]);
                }
            }
        }
        g
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&w| w != v).collect();
        self.induced(&keep)
    }

    /// Relabel so vertex `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n());
        for (i, j) in self.edges() {
            g.adj[perm[i]].insert(perm[j]);
            g.adj[perm[j]].insert(perm[i]);
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = Graph::empty(off + other.n());
        for (i, j) in self.edges() {
            g.adj[i].insert(j);
            g.adj[j].insert(i);
        }
        for (i, j) in other.edges() {
            g.adj[off + i].insert(off + j);
            g.adj[off + j].insert(off + i);
        }
        g
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.is_connected() && self.edge_count() + 1 == self.n()
    }

    /// A path in the graph-theoretic sense: connected, acyclic, max degree 2.
    /// The single vertex counts as a path.
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("valid cycle");
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::from_edges(k + 1, &edges).expect("valid star")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(i, j)| format!("{}-{}", i + 1, j + 1))
            .collect();
        write!(f, "Graph(n={}, [{}])", self.n(), edges.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> GraphRepr {
        GraphRepr {
            n: g.n(),
            edges: g.edges().into_iter().map(|(i, j)| [i + 1, j + 1]).collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Graph> {
        let mut g = Graph::empty(r.n);
        for [i, j] in r.edges {
            if i == 0 || j == 0 {
                return Err(Error::Shape("vertex labels are 1-based".into()));
            }
            g.add_edge(i - 1, j - 1)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let p3 = Graph::path(3);
        assert_eq!(p3.complement().edges(), vec![(0, 2)]);
    }

    #[test]
    fn structure_queries() {
        assert!(Graph::path(1).is_path());
        assert!(Graph::path(5).is_path());
        assert!(!Graph::cycle(4).is_path());
        assert!(Graph::cycle(4).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
        assert_eq!(Graph::empty(3).components().len(), 3);
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn json_is_one_based() {
        let s = serde_json::to_string(&Graph::path(3)).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[1,2],[2,3]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, Graph::path(3));
    }
}
