//! Realizes a spectrum as a symmetric matrix with unit row sums, decides
//! whether the result is doubly stochastic, and provides the Householder
//! alternative for comparison.
//!
//! With `Q` the orthogonal symmetric walk basis and `L = diag(spectrum)`,
//! the realized matrix is `P = Q L Q^T`. Its entries have the closed form
//!
//! ```text
//! p_kl = (1 + 2 * sum_{j=1}^{n-1} lambda_j S_j(k) S_j(l)) / n
//! S_j(k) = sin(2*pi*k*j/n + pi/4)
//! ```
//!
//! so `P` is symmetric and every row and column sums to 1 for any input
//! spectrum; non-negativity of the entries is exactly the feasibility
//! inequality `sum_j lambda_j S_j(k) S_j(l) >= -1/2` over all index pairs.
//! Two sufficient bounds follow: a non-positive tail may sum to no less
//! than -1/2, a non-negative tail to no more than 1/2.

use serde::Serialize;
use thiserror::Error;

use crate::matrix::DenseSymMatrix;
use crate::rw_basis::{build_basis, sin_quarter};
use crate::spectrum::Spectrum;

/// Entries above `-ENTRY_TOLERANCE` count as non-negative: this separates
/// floating-point dust from genuine infeasibility (which shows up at the
/// 1e-4 scale in the interesting cases).
pub const ENTRY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum ConstructError {
    #[error("householder construction needs n >= 2, got {0}")]
    HouseholderTooSmall(usize),
}

/// `n x n` table with `t[k*n + j] = sin(2*pi*k*j/n + pi/4)`.
fn sin_table(n: usize) -> Vec<f64> {
    let mut t = vec![0.0; n * n];
    for k in 0..n {
        for j in k..n {
            let v = sin_quarter(n, j, k);
            t[k * n + j] = v;
            t[j * n + k] = v;
        }
    }
    t
}

/// Builds the realized matrix by the closed-form entry formula. Always
/// succeeds: rows and columns sum to 1 regardless of the spectrum, and
/// non-negativity is judged separately by [`feasibility`].
pub fn construct(s: &Spectrum) -> DenseSymMatrix {
    let n = s.n();
    let lam = s.values();
    let t = sin_table(n);
    let inv_n = 1.0 / n as f64;
    let mut entries = vec![0.0; n * n];
    for k in 0..n {
        for l in k..n {
            let tk = &t[k * n..(k + 1) * n];
            let tl = &t[l * n..(l + 1) * n];
            let mut acc = 0.0;
            for j in 1..n {
                acc += lam[j] * tk[j] * tl[j];
            }
            let p = (1.0 + 2.0 * acc) * inv_n;
            entries[k * n + l] = p;
            entries[l * n + k] = p;
        }
    }
    DenseSymMatrix::from_entries(n, entries).expect("constructed entries are finite and square")
}

/// Same matrix as [`construct`], assembled instead as the explicit triple
/// product `Q * L * Q^T` over the materialized basis. Kept as the
/// independent oracle for the closed form.
pub fn construct_via_basis(s: &Spectrum) -> DenseSymMatrix {
    let n = s.n();
    let lam = s.values();
    let q = build_basis(n).expect("spectrum length is positive");
    // tmp = L * Q^T, then out = Q * tmp
    let mut tmp = vec![0.0; n * n];
    for j in 0..n {
        for l in 0..n {
            tmp[j * n + l] = lam[j] * q.get(l, j);
        }
    }
    let mut out = vec![0.0; n * n];
    for k in 0..n {
        for l in 0..n {
            let mut acc = 0.0;
            for j in 0..n {
                acc += q.get(k, j) * tmp[j * n + l];
            }
            out[k * n + l] = acc;
        }
    }
    DenseSymMatrix::from_entries(n, out).expect("triple product entries are finite and square")
}

/// Pass/fail of the entry non-negativity inequality, with a witness for the
/// most negative entry on failure.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FeasibilityCertificate {
    pub feasible: bool,
    pub witness_k: Option<usize>,
    pub witness_l: Option<usize>,
    /// Raw value of the offending entry (un-clamped).
    pub witness_value: Option<f64>,
    /// Smallest matrix entry, reported raw even when feasible.
    pub min_entry: f64,
}

/// Evaluates the feasibility inequality for all `0 <= k <= l <= n-1`
/// (symmetry halves the work). The witness is the minimum entry's index
/// pair, ties broken in row-major order.
pub fn feasibility(s: &Spectrum) -> FeasibilityCertificate {
    let n = s.n();
    let lam = s.values();
    let t = sin_table(n);
    let inv_n = 1.0 / n as f64;
    let mut min_entry = f64::INFINITY;
    let mut min_k = 0;
    let mut min_l = 0;
    for k in 0..n {
        for l in k..n {
            let tk = &t[k * n..(k + 1) * n];
            let tl = &t[l * n..(l + 1) * n];
            let mut acc = 0.0;
            for j in 1..n {
                acc += lam[j] * tk[j] * tl[j];
            }
            let p = (1.0 + 2.0 * acc) * inv_n;
            if p < min_entry {
                min_entry = p;
                min_k = k;
                min_l = l;
            }
        }
    }
    let feasible = min_entry >= -ENTRY_TOLERANCE;
    FeasibilityCertificate {
        feasible,
        witness_k: (!feasible).then_some(min_k),
        witness_l: (!feasible).then_some(min_l),
        witness_value: (!feasible).then_some(min_entry),
        min_entry,
    }
}

/// Which of the two sufficient tail-sum bounds covers the spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CorollaryBound {
    /// Non-positive tail with sum `>= -1/2`.
    SuleimanovaPass,
    /// Non-negative tail with sum `<= 1/2`.
    NonnegativePass,
    /// Mixed signs, or the sum bound fails.
    NotCovered,
}

pub fn corollary_bound(s: &Spectrum) -> CorollaryBound {
    let mut sum = 0.0;
    let mut all_nonpos = true;
    let mut all_nonneg = true;
    for &v in s.tail() {
        sum += v;
        all_nonpos &= v <= 0.0;
        all_nonneg &= v >= 0.0;
    }
    if all_nonpos && sum >= -0.5 {
        CorollaryBound::SuleimanovaPass
    } else if all_nonneg && sum <= 0.5 {
        CorollaryBound::NonnegativePass
    } else {
        CorollaryBound::NotCovered
    }
}

/// Conjugates the spectrum by the Householder reflection `H(v)` for
/// `v = (1 - sqrt(n), 1, ..., 1)`: another orthogonal symmetric generator,
/// kept for comparison. Rows still sum to 1, but for non-positive tails the
/// diagonal
///
/// ```text
/// (H L H)_kk = 1/n + alpha^2 * sum_{j>=1, j!=k} lambda_j + (1-alpha)^2 * lambda_k
/// ```
///
/// with `alpha = 1/(sqrt(n)(sqrt(n)-1))` goes negative as `n` grows, so the
/// result is returned unconditionally and stochasticity is judged by the
/// caller.
pub fn householder_construct(s: &Spectrum) -> Result<DenseSymMatrix, ConstructError> {
    let n = s.n();
    if n < 2 {
        return Err(ConstructError::HouseholderTooSmall(n));
    }
    let lam = s.values();
    let root_n = (n as f64).sqrt();
    let alpha = 1.0 / (root_n * (root_n - 1.0));
    let beta = 1.0 / root_n;

    let mut h = vec![-alpha; n * n];
    for j in 0..n {
        h[j] = beta;
        h[j * n] = beta;
    }
    for i in 1..n {
        h[i * n + i] = 1.0 - alpha;
    }

    let mut entries = vec![0.0; n * n];
    for k in 0..n {
        for l in k..n {
            let mut acc = 0.0;
            for j in 0..n {
                acc += lam[j] * h[k * n + j] * h[l * n + j];
            }
            entries[k * n + l] = acc;
            entries[l * n + k] = acc;
        }
    }
    Ok(DenseSymMatrix::from_entries(n, entries).expect("reflection entries are finite and square"))
}
