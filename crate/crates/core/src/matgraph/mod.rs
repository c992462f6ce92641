//! Graphs, file formats, matrix patterns and the structural recognizers.

mod enumerate;
mod families;
mod graph;
mod io;
pub mod named;
mod pattern;
mod subgraph;

pub use enumerate::{canonical_code, enumerate_graphs, MAX_ENUMERATION_ORDER};
pub use families::{
    find_disjoint_pair, find_obstruction, recognize_high_q_family, ForbiddenGraph, HighQFamily,
    Obstruction, Piece,
};
pub use graph::Graph;
pub use io::{emit_edge_list, emit_graph6, parse_graph, GraphFormat};
pub use pattern::{matches_pattern, pattern_of, PatternVerdict, PatternViolation, ViolationReason};
pub use subgraph::{contains_subgraph, is_isomorphic, SubgraphMode};
