use nalgebra::{DMatrix, DVector};

use super::MAX_HALVINGS;
use crate::error::{Error, PathStep, Result};

const MAX_NEWTON_ITERS: usize = 40;
/// Residual must halve at least once every this many iterations.
const STALL_WINDOW: usize = 5;

pub(super) struct System<'a> {
    pub seed: &'a DMatrix<f64>,
    /// Eigenprojectors of the seed; empty in spectrum mode.
    pub projectors: &'a [DMatrix<f64>],
    /// Non-edges of the seed graph, the constrained positions.
    pub rows: &'a [(usize, usize)],
    /// Whether each row is an edge of the supergraph (target `t`) or not (target `0`).
    pub new_edges: &'a [bool],
}

#[derive(Clone)]
struct State {
    u: DMatrix<f64>,
    c: Vec<f64>,
}

enum Outcome {
    Converged { state: State, residual: f64, iters: usize },
    Stalled { residual: f64, iters: usize },
}

impl System<'_> {
    fn n(&self) -> usize {
        self.seed.nrows()
    }

    fn assemble(&self, s: &State) -> DMatrix<f64> {
        let mut inner = self.seed.clone();
        for (c, p) in s.c.iter().zip(self.projectors) {
            inner += p * *c;
        }
        let b = &s.u * inner * s.u.transpose();
        (&b + b.transpose()) * 0.5
    }

    fn residual(&self, b: &DMatrix<f64>, t: f64) -> DVector<f64> {
        DVector::from_iterator(
            self.rows.len(),
            self.rows
                .iter()
                .zip(self.new_edges)
                .map(|(&(i, j), &new)| b[(i, j)] - if new { t } else { 0.0 }),
        )
    }

    /// Columns: `[K_kl, B]` for `k < l` on the constrained positions, then
    /// `U P_j U^T` for the multiplicity-list unknowns.
    fn jacobian(&self, s: &State, b: &DMatrix<f64>) -> DMatrix<f64> {
        let n = self.n();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|k| (k + 1..n).map(move |l| (k, l))).collect();
        let rotated: Vec<DMatrix<f64>> = self.projectors.iter().map(|p| &s.u * p * s.u.transpose()).collect();
        DMatrix::from_fn(self.rows.len(), pairs.len() + rotated.len(), |r, col| {
            let (i, j) = self.rows[r];
            if let Some(&(k, l)) = pairs.get(col) {
                // ([K, B])_ij with K = E_kl - E_lk
                let mut v = 0.0;
                if i == k {
                    v += b[(l, j)];
                }
                if i == l {
                    v -= b[(k, j)];
                }
                if j == l {
                    v -= b[(i, k)];
                }
                if j == k {
                    v += b[(i, l)];
                }
                v
            } else {
                rotated[col - pairs.len()][(i, j)]
            }
        })
    }

    fn step(&self, s: &State, delta: &DVector<f64>) -> State {
        let n = self.n();
        let mut w = DMatrix::zeros(n, n);
        let mut idx = 0;
        for k in 0..n {
            for l in k + 1..n {
                w[(k, l)] = delta[idx];
                w[(l, k)] = -delta[idx];
                idx += 1;
            }
        }
        let c = s.c.iter().enumerate().map(|(j, c)| c + delta[idx + j]).collect();
        State { u: w.exp() * &s.u, c }
    }

    fn newton(&self, start: &State, t: f64, tol: f64) -> Result<Outcome> {
        let mut s = start.clone();
        let mut b = self.assemble(&s);
        let mut r = self.residual(&b, t);
        let mut history = vec![r.amax()];
        for iter in 1..=MAX_NEWTON_ITERS {
            if history[iter - 1] <= tol {
                return Ok(Outcome::Converged { state: s, residual: history[iter - 1], iters: iter - 1 });
            }
            let j = self.jacobian(&s, &b);
            let svd = j.svd(true, true);
            let cutoff = 1e-12 * svd.singular_values.max();
            let delta = svd
                .solve(&(-&r), cutoff)
                .map_err(|e| Error::Numeric(format!("Newton step: {e}")))?;
            s = self.step(&s, &delta);
            b = self.assemble(&s);
            r = self.residual(&b, t);
            let res = r.amax();
            if !res.is_finite() {
                return Ok(Outcome::Stalled { residual: res, iters: iter });
            }
            history.push(res);
            if iter >= STALL_WINDOW && res > 0.5 * history[iter - STALL_WINDOW] && res > tol {
                return Ok(Outcome::Stalled { residual: res, iters: iter });
            }
        }
        let res = *history.last().expect("nonempty");
        if res <= tol {
            Ok(Outcome::Converged { state: s, residual: res, iters: MAX_NEWTON_ITERS })
        } else {
            Ok(Outcome::Stalled { residual: res, iters: MAX_NEWTON_ITERS })
        }
    }
}

/// Drives the new entries from `0` to `t_target` in `steps` equal steps,
/// halving a step whenever Newton stalls.
pub(super) fn continuation(
    sys: &System<'_>,
    t_target: f64,
    steps: usize,
    tol: f64,
) -> Result<(DMatrix<f64>, Vec<PathStep>)> {
    let n = sys.n();
    let mut state = State { u: DMatrix::identity(n, n), c: vec![0.0; sys.projectors.len()] };
    let mut log = Vec::new();
    let base = t_target / steps as f64;
    let mut t = 0.0;
    let mut k = 0usize;
    while k < steps {
        let goal = if k + 1 == steps { t_target } else { base * (k + 1) as f64 };
        let mut h = goal - t;
        let mut halvings = 0;
        while t < goal {
            let next = if goal - (t + h) < 1e-3 * h { goal } else { t + h };
            match sys.newton(&state, next, tol)? {
                Outcome::Converged { state: s, residual, iters } => {
                    state = s;
                    t = next;
                    log.push(PathStep { t, residual, newton_iters: iters });
                }
                Outcome::Stalled { residual, iters } => {
                    halvings += 1;
                    if halvings > MAX_HALVINGS {
                        log.push(PathStep { t: next, residual, newton_iters: iters });
                        return Err(Error::Continuation {
                            t: next,
                            message: format!("Newton stalled with residual {residual:.3e} after {MAX_HALVINGS} step halvings"),
                            path_log: log,
                        });
                    }
                    h *= 0.5;
                }
            }
        }
        k += 1;
    }
    Ok((sys.assemble(&state), log))
}
