use nalgebra::DMatrix;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{ExactMatrix, ExactScalar};

/// Default tolerance for symmetry and pattern tests on float matrices.
pub const DEFAULT_FLOAT_TOL: f64 = 1e-9;

/// A symmetric matrix with either exact or floating-point entries.
///
/// Serializes as `{"mode": "exact"|"float", "n": N, "entries": [...]}` with
/// row-major entries; exact entries are scalar strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "Repr", try_from = "Repr")]
pub enum SymMatrix {
    Exact(ExactMatrix),
    Float(DMatrix<f64>),
}

/// Whether a computation ran in exact arithmetic or floating point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl SymMatrix {
    pub fn exact(m: ExactMatrix) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::Shape(format!(
                "{}x{} exact matrix is not symmetric",
                m.nrows(),
                m.ncols()
            )));
        }
        Ok(SymMatrix::Exact(m))
    }

    /// Accepts a float matrix whose asymmetry is within `tol` (relative to
    /// its largest entry) and symmetrizes it.
    pub fn float(m: DMatrix<f64>, tol: f64) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::Shape("float matrix is not square".into()));
        }
        if m.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numeric("matrix has non-finite entries".into()));
        }
        let scale = m.amax().max(1.0);
        let asym = (&m - m.transpose()).amax();
        if asym > tol * scale {
            return Err(Error::Shape(format!(
                "float matrix is not symmetric (max asymmetry {asym:e})"
            )));
        }
        Ok(SymMatrix::Float((&m + m.transpose()) * 0.5))
    }

    pub fn n(&self) -> usize {
        match self {
            SymMatrix::Exact(m) => m.nrows(),
            SymMatrix::Float(m) => m.nrows(),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            SymMatrix::Exact(_) => Mode::Exact,
            SymMatrix::Float(_) => Mode::Float,
        }
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        match self {
            SymMatrix::Exact(m) => m.to_f64(),
            SymMatrix::Float(m) => m.clone(),
        }
    }

    /// Float view of the same matrix.
    pub fn as_float(&self) -> SymMatrix {
        SymMatrix::Float(self.to_f64())
    }

    pub fn as_exact(&self) -> Option<&ExactMatrix> {
        match self {
            SymMatrix::Exact(m) => Some(m),
            SymMatrix::Float(_) => None,
        }
    }
}

impl From<DMatrix<f64>> for SymMatrix {
    fn from(m: DMatrix<f64>) -> Self {
        SymMatrix::Float(m)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
enum Repr {
    Exact { n: usize, entries: Vec<ExactScalar> },
    Float { n: usize, entries: Vec<f64> },
}

impl From<SymMatrix> for Repr {
    fn from(m: SymMatrix) -> Repr {
        match m {
            SymMatrix::Exact(m) => Repr::Exact {
                n: m.nrows(),
                entries: m.entries().to_vec(),
            },
            SymMatrix::Float(m) => {
                let n = m.nrows();
                Repr::Float {
                    n,
                    entries: (0..n * n).map(|k| m[(k / n, k % n)]).collect(),
                }
            }
        }
    }
}

impl TryFrom<Repr> for SymMatrix {
    type Error = Error;
    fn try_from(r: Repr) -> Result<SymMatrix> {
        match r {
            Repr::Exact { n, entries } => SymMatrix::exact(ExactMatrix::new(n, n, entries)?),
            Repr::Float { n, entries } => {
                if entries.len() != n * n {
                    return Err(Error::Shape(format!("{} entries for n = {n}", entries.len())));
                }
                SymMatrix::float(DMatrix::from_row_slice(n, n, &entries), DEFAULT_FLOAT_TOL)
            }
        }
    }
}
