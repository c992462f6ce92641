//! Deciding the SAP, SSP and SMP.
//!
//! Two independent paths are provided: the rank criteria on `vec` of the
//! tangent generators restricted to the non-edges, and the definitional
//! linear system on the unknown symmetric matrix `X`.

mod constraints;
mod definition;
mod dirsum;
mod gershgorin;
mod tangent;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::symmatrix::{Mode, SymMatrix};

pub use definition::{verify_by_definition, witness_satisfies};
pub use dirsum::direct_sum_verdict;
pub use gershgorin::{gershgorin_ssp, GershgorinOutcome, GershgorinReport};
pub use tangent::{
    edge_bound_check, edge_bounds, tangent_dims, tangent_dims_closed_form, tangent_span_ranks,
    EdgeBoundReport, SpanRank, TangentDims, TangentSpanRanks,
};
pub use verify::{verify, verify_sap, verify_smp, verify_ssp, VerifyOptions};

pub(crate) use constraints::{criterion_columns, upper_positions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Property {
    Sap,
    Ssp,
    Smp,
}

impl Property {
    pub const ALL: [Property; 3] = [Property::Sap, Property::Ssp, Property::Smp];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Sap => "SAP",
            Property::Ssp => "SSP",
            Property::Smp => "SMP",
        })
    }
}

impl FromStr for Property {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "sap" => Ok(Property::Sap),
            "ssp" => Ok(Property::Ssp),
            "smp" => Ok(Property::Smp),
            other => Err(Error::parse("property", format!("unknown property `{other}`"))),
        }
    }
}

/// Which computation produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictPath {
    RankCriterion,
    Definition,
    DirectSum,
}

/// Outcome of a strong-property test.
///
/// `verdict == (rank == p)` always holds. For a definitional verdict `rank`
/// is `p` minus the nullity of the system, which is the rank the criterion
/// matrix must have.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StrongPropertyReport {
    pub property: Property,
    pub verdict: bool,
    /// Number of non-edges of the graph.
    pub p: usize,
    pub rank: usize,
    pub mode: Mode,
    /// Float mode: ratio of the smallest kept to the largest dropped
    /// singular value.
    #[serde(
        serialize_with = "crate::report::ser_opt_f64",
        deserialize_with = "crate::report::de_opt_f64"
    )]
    pub margin: Option<f64>,
    /// Nonzero `X` from the definitional system when the verdict is false.
    pub witness: Option<SymMatrix>,
    pub path: VerdictPath,
    /// Number of distinct eigenvalues used for the SMP power columns.
    pub q: Option<usize>,
    /// Set when the float verdict rests on a poorly separated eigenvalue
    /// clustering.
    pub advisory: bool,
}
