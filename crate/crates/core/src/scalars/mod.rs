//! Exact arithmetic over `Q` and `Q(sqrt(d))`, plus the rank kernels.

mod exact;
mod matrix;
mod rank;

pub use exact::{common_radicand, ExactScalar};
pub use matrix::ExactMatrix;
pub use rank::{nullspace_basis_exact, rank_exact, rank_float, rank_float_scaled, DEFAULT_RANK_TOL};

/// Minimal ring interface so constraint matrices can be assembled once for
/// both exact and floating-point entries.
pub trait Scalar: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Scalar for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn one() -> Self {
        ExactScalar::one()
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Square matrix in row-major order over any [`Scalar`].
#[derive(Clone, Debug, PartialEq)]
pub struct Square<T> {
    pub n: usize,
    pub data: Vec<T>,
}

impl<T: Scalar> Square<T> {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Square { n, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn mul(&self, rhs: &Square<T>) -> Square<T> {
        let n = self.n;
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        data[i * n + j] = data[i * n + j].add(&a.mul(b));
                    }
                }
            }
        }
        Square { n, data }
    }

    /// `I, A, ..., A^(k-1)`.
    pub fn powers(&self, k: usize) -> Vec<Square<T>> {
        let mut out: Vec<Square<T>> = Vec::with_capacity(k);
        for i in 0..k {
            let next = if i == 0 {
                Square::identity(self.n)
            } else {
                out[i - 1].mul(self)
            };
            out.push(next);
        }
        out
    }
}

impl From<&ExactMatrix> for Square<ExactScalar> {
    fn from(m: &ExactMatrix) -> Self {
        Square {
            n: m.nrows(),
            data: m.entries().to_vec(),
        }
    }
}

impl From<&nalgebra::DMatrix<f64>> for Square<f64> {
    fn from(m: &nalgebra::DMatrix<f64>) -> Self {
        let n = m.nrows();
        Square {
            n,
            data: (0..n * n).map(|k| m[(k / n, k % n)]).collect(),
        }
    }
}
