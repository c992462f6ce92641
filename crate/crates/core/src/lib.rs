//! Strong Arnold, Strong Spectral and Strong Multiplicity Properties of
//! symmetric matrices described by graphs.
//!
//! The crate decides the three properties exactly (over `Q` or `Q(sqrt(d))`)
//! or in floating point, bounds the minimum number of distinct eigenvalues
//! `q(G)` of a graph, and numerically lifts strong-property matrices to
//! supergraphs.

pub mod constructs;
pub mod error;
pub mod lifting;
pub mod matgraph;
pub mod qbounds;
mod report;
pub mod scalars;
pub mod spectra;
pub mod strongprops;
mod symmatrix;

pub use constructs::{Certificate, Claim};
pub use error::{Error, PathStep, Result};
pub use lifting::{LiftMode, LiftProblem, LiftResult};
pub use matgraph::{Graph, GraphFormat, PatternVerdict};
pub use qbounds::{BoundReport, GraphParams};
pub use scalars::{ExactMatrix, ExactScalar};
pub use spectra::{MultiplicityList, SpectralData};
pub use strongprops::{Property, StrongPropertyReport};
pub use symmatrix::{Mode, SymMatrix, DEFAULT_FLOAT_TOL};
