//! Desk-scale search for matrices of large nullity in `S(G)`.
//!
//! The results are maxima over the matrices tried, so they are lower
//! bounds on `M(G)` and `M+(G)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{GraphParams, ParamSource, SourcedValue};
use crate::error::{Error, Result};
use crate::matgraph::Graph;

pub const MAX_NULLITY_SEARCH_ORDER: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullitySearchOptions {
    /// Integer entries in `[-range, range]` for the exhaustive sweep.
    pub range: i64,
    /// The exhaustive sweep is skipped when it would exceed this many matrices.
    pub exhaustive_limit: u64,
    pub random_trials: usize,
    /// Random Gram matrices `V V^T` with `V` in `{-1, 0, 1}^{n x k}`.
    pub gram_trials: usize,
    pub seed: u64,
}

impl Default for NullitySearchOptions {
    fn default() -> Self {
        NullitySearchOptions {
            range: 2,
            exhaustive_limit: 500_000,
            random_trials: 20_000,
            gram_trials: 20_000,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullitySearch {
    pub max_nullity: usize,
    pub psd_max_nullity: usize,
    /// Whether the full integer sweep over `[-range, range]` ran.
    pub exhaustive: bool,
    pub matrices_tried: u64,
}

impl NullitySearch {
    pub fn to_params(&self) -> GraphParams {
        let v = |value| Some(SourcedValue { value, source: ParamSource::BruteForced });
        GraphParams {
            max_nullity: v(self.max_nullity),
            psd_max_nullity: v(self.psd_max_nullity),
            clique_cover_number: None,
        }
    }
}

struct Tracker {
    n: usize,
    best: usize,
    best_psd: usize,
    tried: u64,
}

impl Tracker {
    fn offer(&mut self, a: &[i64], known_psd: bool) {
        self.tried += 1;
        let null = self.n - int_rank(a, self.n);
        if null > self.best {
            self.best = null;
        }
        if null > self.best_psd && (known_psd || is_psd(a, self.n)) {
            self.best_psd = null;
        }
    }
}

/// Searches integer matrices in `S(g)`: an exhaustive sweep over small
/// entries (one sign fixed per spanning-forest edge), random integer
/// matrices and random Gram matrices.
pub fn brute_force_nullities(g: &Graph, opts: &NullitySearchOptions) -> Result<NullitySearch> {
    let n = g.n();
    if n > MAX_NULLITY_SEARCH_ORDER {
        return Err(Error::Resource(format!(
            "nullity search is limited to {MAX_NULLITY_SEARCH_ORDER} vertices, got {n}"
        )));
    }
    if opts.range < 1 {
        return Err(Error::InvalidField("nullity search range must be at least 1".into()));
    }
    let mut t = Tracker { n, best: 0, best_psd: 0, tried: 0 };
    if n == 0 {
        return Ok(NullitySearch { max_nullity: 0, psd_max_nullity: 0, exhaustive: true, matrices_tried: 0 });
    }
    let edges = g.edges();
    let forest = spanning_forest(g);

    // slot values: diagonal, then edges
    let r = opts.range;
    let diag_vals: Vec<i64> = (-r..=r).collect();
    let pos_vals: Vec<i64> = (1..=r).collect();
    let signed_vals: Vec<i64> = (-r..=r).filter(|&v| v != 0).collect();
    let mut slots: Vec<&[i64]> = vec![&diag_vals; n];
    for e in &edges {
        slots.push(if forest.contains(e) { &pos_vals } else { &signed_vals });
    }
    let total = slots
        .iter()
        .try_fold(1u64, |acc, s| acc.checked_mul(s.len() as u64))
        .unwrap_or(u64::MAX);
    let exhaustive = total <= opts.exhaustive_limit;
    let mut a = vec![0i64; n * n];
    let fill = |a: &mut [i64], vals: &[i64]| {
        for i in 0..n {
            a[i * n + i] = vals[i];
        }
        for (k, &(i, j)) in edges.iter().enumerate() {
            a[i * n + j] = vals[n + k];
            a[j * n + i] = vals[n + k];
        }
    };
    if exhaustive {
        let mut idx = vec![0usize; slots.len()];
        let mut vals: Vec<i64> = slots.iter().map(|s| s[0]).collect();
        'sweep: loop {
            fill(&mut a, &vals);
            t.offer(&a, false);
            for k in 0..slots.len() {
                idx[k] += 1;
                if idx[k] < slots[k].len() {
                    vals[k] = slots[k][idx[k]];
                    continue 'sweep;
                }
                idx[k] = 0;
                vals[k] = slots[k][0];
            }
            break;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut vals = vec![0i64; n + edges.len()];
    for _ in 0..opts.random_trials {
        for v in vals.iter_mut().take(n) {
            *v = rng.gen_range(-3..=3);
        }
        for v in vals.iter_mut().skip(n) {
            *v = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        }
        fill(&mut a, &vals);
        t.offer(&a, false);
    }

    for _ in 0..opts.gram_trials {
        let k = rng.gen_range(1..=n);
        let v: Vec<i64> = (0..n * k).map(|_| rng.gen_range(-1..=1)).collect();
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = (0..k).map(|l| v[i * k + l] * v[j * k + l]).sum();
            }
        }
        let matches = (0..n).all(|i| (i + 1..n).all(|j| (a[i * n + j] != 0) == g.has_edge(i, j)));
        if matches {
            t.offer(&a, true);
        }
    }

    Ok(NullitySearch {
        max_nullity: t.best,
        psd_max_nullity: t.best_psd,
        exhaustive,
        matrices_tried: t.tried,
    })
}

fn spanning_forest(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    out.push((u.min(v), u.max(v)));
                    stack.push(v);
                }
            }
        }
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Rank over `Q` of an `n x n` integer matrix.
fn int_rank(a: &[i64], n: usize) -> usize {
    let mut m: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| a[i * n + j] as i128).collect()).collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, p);
        for r in rank + 1..n {
            if m[r][col] == 0 {
                continue;
            }
            let (piv, f) = (m[rank][col], m[r][col]);
            let mut g = 0;
            for c in col..n {
                m[r][c] = m[r][c] * piv - m[rank][c] * f;
                g = gcd(g, m[r][c]);
            }
            if g > 1 {
                for c in col..n {
                    m[r][c] /= g;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant by fraction-free (Bareiss) elimination.
fn int_det(m: &mut [Vec<i128>]) -> i128 {
    let k = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| m[r][c] != 0) else { return 0 };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    sign * m[k - 1][k - 1]
}

/// Positive semidefinite iff every principal minor is nonnegative.
fn is_psd(a: &[i64], n: usize) -> bool {
    if (0..n).any(|i| a[i * n + i] < 0) {
        return false;
    }
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if idx.len() == 1 {
            continue;
        }
        let mut sub: Vec<Vec<i128>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| a[i * n + j] as i128).collect())
            .collect();
        if int_det(&mut sub) < 0 {
            return false;
        }
    }
    true
}
