//! Graphs with `q(G) >= |G| - 1`: direct recognition and the independent
//! forbidden-structure search.

use serde::{Deserialize, Serialize};

use super::named;
use super::subgraph::{contains_subgraph, SubgraphMode};
use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HighQFamily {
    Path,
    PathPlusIsolatedVertex,
    PathWithInteriorLeaf,
    PathWithDistance2Chord,
    None,
}

/// Matches `g` against the four families by direct structural tests.
pub fn recognize_high_q_family(g: &Graph) -> HighQFamily {
    if g.n() == 0 {
        return HighQFamily::None;
    }
    if g.is_path() {
        return HighQFamily::Path;
    }
    let comps = g.components();
    if comps.len() == 2 {
        let (small, big) = if comps[0].len() <= comps[1].len() {
            (&comps[0], &comps[1])
        } else {
            (&comps[1], &comps[0])
        };
        if small.len() == 1 && g.induced(big).is_path() {
            return HighQFamily::PathPlusIsolatedVertex;
        }
        return HighQFamily::None;
    }
    if comps.len() > 2 {
        return HighQFamily::None;
    }
    let n = g.n();
    if g.is_tree() {
        let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
        if branch.len() == 1 && g.degree(branch[0]) == 3 {
            let w = branch[0];
            if g.neighbors(w).any(|u| g.degree(u) == 1) {
                return HighQFamily::PathWithInteriorLeaf;
            }
        }
        return HighQFamily::None;
    }
    if g.edge_count() == n {
        // unicyclic: the chord closes a triangle through a degree-2 vertex
        let chord_vertex = (0..n).any(|v| {
            if g.degree(v) != 2 {
                return false;
            }
            let nb: Vec<usize> = g.neighbors(v).collect();
            g.has_edge(nb[0], nb[1]) && g.without_vertex(v).is_path()
        });
        if chord_vertex {
            return HighQFamily::PathWithDistance2Chord;
        }
    }
    HighQFamily::None
}

/// Named forbidden subgraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForbiddenGraph {
    HTree,
    Campstool,
    LongYTree,
    ThreeSun,
    Cycle(usize),
}

impl ForbiddenGraph {
    pub fn graph(self) -> Graph {
        match self {
            ForbiddenGraph::HTree => named::h_tree(),
            ForbiddenGraph::Campstool => named::campstool(),
            ForbiddenGraph::LongYTree => named::long_y_tree(),
            ForbiddenGraph::ThreeSun => named::three_sun(),
            ForbiddenGraph::Cycle(k) => Graph::cycle(k),
        }
    }

    pub fn name(self) -> String {
        match self {
            ForbiddenGraph::HTree => "H tree".into(),
            ForbiddenGraph::Campstool => "campstool".into(),
            ForbiddenGraph::LongYTree => "long Y tree".into(),
            ForbiddenGraph::ThreeSun => "3-sun".into(),
            ForbiddenGraph::Cycle(k) => format!("C{k}"),
        }
    }
}

/// One half of a vertex-disjoint pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Piece {
    K3,
    K13,
}

impl Piece {
    pub fn graph(self) -> Graph {
        match self {
            Piece::K3 => Graph::complete(3),
            Piece::K13 => Graph::star(3),
        }
    }
}

/// A structure showing `q(G) <= |G| - 2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Obstruction {
    /// Isomorphic copy of a forbidden graph; `embedding[v]` is the image of `v`.
    Subgraph {
        graph: ForbiddenGraph,
        #[serde(with = "crate::report::one_based")]
        embedding: Vec<usize>,
    },
    /// Two vertex-disjoint pieces; the first piece uses the first
    /// `first.graph().n()` entries of `embedding`.
    DisjointPair {
        first: Piece,
        second: Piece,
        #[serde(with = "crate::report::one_based")]
        embedding: Vec<usize>,
    },
    /// At least three components, or two components with two or more vertices each.
    Disconnected {
        #[serde(with = "crate::report::one_based")]
        components: Vec<Vec<usize>>,
    },
    /// `H ∪ K1` with `H` not a path.
    NonPathPlusIsolatedVertex {
        #[serde(with = "crate::report::one_based")]
        isolated: usize,
    },
    /// Deleting `vertex` leaves components whose maximum nullities (1 for a
    /// path, at least 2 otherwise) add up to `weight >= 4`, so `M(G) >= 3`.
    CutVertex {
        #[serde(with = "crate::report::one_based")]
        vertex: usize,
        weight: usize,
    },
}

impl Obstruction {
    /// Re-checks the obstruction against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        match self {
            Obstruction::Subgraph { graph, embedding } => {
                embedding_valid(g, &graph.graph(), embedding)
            }
            Obstruction::DisjointPair {
                first,
                second,
                embedding,
            } => embedding_valid(g, &first.graph().disjoint_union(&second.graph()), embedding),
            Obstruction::Disconnected { components } => {
                let actual = g.components();
                &actual == components
                    && (actual.len() >= 3 || actual.iter().filter(|c| c.len() >= 2).count() >= 2)
            }
            Obstruction::NonPathPlusIsolatedVertex { isolated } => {
                let comps = g.components();
                comps.len() == 2
                    && *isolated < g.n()
                    && g.degree(*isolated) == 0
                    && !g.without_vertex(*isolated).is_path()
            }
            Obstruction::CutVertex { vertex, weight } => {
                *vertex < g.n() && *weight >= 4 && cut_weight(g, *vertex) == *weight
            }
        }
    }
}

fn embedding_valid(g: &Graph, h: &Graph, emb: &[usize]) -> bool {
    if emb.len() != h.n() || emb.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = std::collections::BTreeSet::new();
    emb.iter().all(|v| seen.insert(*v)) && h.edges().iter().all(|&(i, j)| g.has_edge(emb[i], emb[j]))
}

fn cut_weight(g: &Graph, w: usize) -> usize {
    let rest = g.without_vertex(w);
    rest.components()
        .iter()
        .map(|c| if rest.induced(c).is_path() { 1 } else { 2 })
        .sum()
}

/// Searches for a structure forcing `q(G) <= |G| - 2`, independently of
/// [`recognize_high_q_family`]. Returns the first one found.
pub fn find_obstruction(g: &Graph) -> Option<Obstruction> {
    if g.n() == 0 {
        return None;
    }
    let comps = g.components();
    if comps.len() >= 3 || comps.iter().filter(|c| c.len() >= 2).count() >= 2 {
        return Some(Obstruction::Disconnected { components: comps });
    }
    if comps.len() == 2 {
        let isolated = comps.iter().find(|c| c.len() == 1).expect("one singleton")[0];
        if g.without_vertex(isolated).is_path() {
            return None;
        }
        return Some(Obstruction::NonPathPlusIsolatedVertex { isolated });
    }
    let mut candidates: Vec<ForbiddenGraph> = (4..=g.n()).map(ForbiddenGraph::Cycle).collect();
    candidates.extend([
        ForbiddenGraph::Campstool,
        ForbiddenGraph::ThreeSun,
        ForbiddenGraph::HTree,
        ForbiddenGraph::LongYTree,
    ]);
    for f in candidates {
        if let Some(embedding) = contains_subgraph(g, &f.graph(), SubgraphMode::Isomorphic) {
            return Some(Obstruction::Subgraph { graph: f, embedding });
        }
    }
    if let Some(pair) = find_disjoint_pair(g) {
        return Some(pair);
    }
    (0..g.n()).find_map(|w| {
        let weight = cut_weight(g, w);
        (weight >= 4).then_some(Obstruction::CutVertex { vertex: w, weight })
    })
}

/// Two vertex-disjoint subgraphs, each a `K3` or a `K_{1,3}`.
pub fn find_disjoint_pair(g: &Graph) -> Option<Obstruction> {
    let pairs = [
        (Piece::K3, Piece::K3),
        (Piece::K3, Piece::K13),
        (Piece::K13, Piece::K13),
    ];
    pairs.into_iter().find_map(|(first, second)| {
        let h = first.graph().disjoint_union(&second.graph());
        contains_subgraph(g, &h, SubgraphMode::Isomorphic).map(|embedding| {
            Obstruction::DisjointPair {
                first,
                second,
                embedding,
            }
        })
    })
}
