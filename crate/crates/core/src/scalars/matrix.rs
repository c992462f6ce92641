use std::ops::{Index, IndexMut};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::exact::{common_radicand, ExactScalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over a single quadratic field `Q(sqrt(d))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactMatrix {
    nrows: usize,
    ncols: usize,
    entries: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn new(nrows: usize, ncols: usize, entries: Vec<ExactScalar>) -> Result<Self> {
        if entries.len() != nrows * ncols {
            return Err(Error::Shape(format!(
                "{} entries for a {nrows}x{ncols} matrix",
                entries.len()
            )));
        }
        let m = ExactMatrix {
            nrows,
            ncols,
            entries,
        };
        m.radicand()?;
        Ok(m)
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        ExactMatrix {
            nrows,
            ncols,
            entries: vec![ExactScalar::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ExactScalar::one();
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| ExactScalar::from_int(v)))
            .collect();
        Self::new(nrows, ncols, entries)
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(nrows: usize, cols: &[Vec<ExactScalar>]) -> Result<Self> {
        let ncols = cols.len();
        let mut m = Self::zeros(nrows, ncols);
        for (j, c) in cols.iter().enumerate() {
            if c.len() != nrows {
                return Err(Error::Shape(format!("column {j} has length {}", c.len())));
            }
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m.radicand()?;
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn entries(&self) -> &[ExactScalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[ExactScalar] {
        &self.entries[i * self.ncols..(i + 1) * self.ncols]
    }

    /// The common radicand of all entries (0 when every entry is rational).
    pub fn radicand(&self) -> Result<u64> {
        self.entries.iter().try_fold(0u64, |acc, e| {
            common_radicand(acc, e.radicand()).ok_or_else(|| {
                Error::InvalidField(format!(
                    "entries mix sqrt({acc}) and sqrt({})",
                    e.radicand()
                ))
            })
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.nrows)
                .all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.ncols != rhs.nrows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows, self.ncols, rhs.nrows, rhs.ncols
            )));
        }
        let mut out = Self::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[ExactScalar]) -> Vec<ExactScalar> {
        (0..self.nrows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(ExactScalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &ExactMatrix,
        f: impl Fn(&ExactScalar, &ExactScalar) -> ExactScalar,
    ) -> Result<ExactMatrix> {
        if self.nrows != rhs.nrows || self.ncols != rhs.ncols {
            return Err(Error::Shape("dimension mismatch".into()));
        }
        common_radicand(self.radicand()?, rhs.radicand()?)
            .ok_or_else(|| Error::InvalidField("operands live in different fields".into()))?;
        Ok(ExactMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &ExactScalar) -> ExactMatrix {
        ExactMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// `self + c*I`.
    pub fn shift(&self, c: &ExactScalar) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::Shape("shift of a non-square matrix".into()));
        }
        let mut m = self.clone();
        for i in 0..self.nrows {
            m[(i, i)] = &m[(i, i)] + c;
        }
        m.radicand()?;
        Ok(m)
    }

    pub fn trace(&self) -> ExactScalar {
        (0..self.nrows.min(self.ncols)).fold(ExactScalar::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ExactScalar::is_zero)
    }

    /// Block-diagonal sum `self (+) rhs`.
    pub fn direct_sum(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        let mut m = Self::zeros(self.nrows + rhs.nrows, self.ncols + rhs.ncols);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..rhs.nrows {
            for j in 0..rhs.ncols {
                m[(self.nrows + i, self.ncols + j)] = rhs[(i, j)].clone();
            }
        }
        m.radicand()?;
        Ok(m)
    }

    /// Simultaneous row/column permutation: entry `(i, j)` moves to `(perm[i], perm[j])`.
    pub fn permute(&self, perm: &[usize]) -> ExactMatrix {
        let mut m = Self::zeros(self.nrows, self.ncols);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                m[(perm[i], perm[j])] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.nrows, self.ncols, |i, j| self[(i, j)].to_f64())
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = ExactScalar;
    fn index(&self, (i, j): (usize, usize)) -> &ExactScalar {
        &self.entries[i * self.ncols + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ExactScalar {
        &mut self.entries[i * self.ncols + j]
    }
}
