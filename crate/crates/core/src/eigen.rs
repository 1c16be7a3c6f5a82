//! In-house symmetric eigensolver and doubly-stochastic verification.
//!
//! The solver diagonalizes by cyclic plane rotations: each rotation
//! annihilates one off-diagonal element, sweeps run row by row over the
//! upper triangle, and iteration stops once the off-diagonal Frobenius mass
//! drops below `tol * ||m||_F`. Later rotations partially undo earlier
//! zeros, but the off-diagonal mass decays quadratically once it is small,
//! so a fixed sweep budget suffices at dense desk scale. The rotation
//! bookkeeping (threshold skipping in early sweeps, accumulating diagonal
//! corrections in a separate array) follows the classical treatment in
//! Numerical Recipes section 11.1.

use serde::Serialize;
use thiserror::Error;

use crate::constructor::construct;
use crate::matrix::DenseSymMatrix;
use crate::spectrum::Spectrum;

/// Relative off-diagonal mass at which the solver declares convergence.
pub const EIGEN_TOLERANCE: f64 = 1e-12;
/// Default absolute tolerance for eigenvalue/spectrum round-trip checks.
pub const ROUNDTRIP_TOLERANCE: f64 = 1e-8;
/// Default tolerance for row/column sum deviations.
pub const ROW_SUM_TOLERANCE: f64 = 1e-10;
/// Input matrices may deviate from exact symmetry by at most this much.
const SYMMETRY_LIMIT: f64 = 1e-10;
/// Maximum number of full rotation sweeps.
const SWEEP_BUDGET: usize = 30;

#[derive(Debug, Error, PartialEq)]
pub enum EigenError {
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("matrix is not symmetric: max |a_kl - a_lk| = {0:e}")]
    NotSymmetric(f64),
    #[error("no convergence after {sweeps} sweeps: off-diagonal mass {off:e} > target {target:e}")]
    NoConvergence { sweeps: usize, off: f64, target: f64 },
}

/// Eigenvalues of a symmetric matrix, sorted in non-increasing order.
///
/// `tol` is relative: iteration stops when the off-diagonal Frobenius norm
/// falls below `tol * ||m||_F`. The input must be symmetric to within
/// `1e-10`; only its upper triangle is read.
pub fn sym_eigenvalues(m: &DenseSymMatrix, tol: f64) -> Result<Vec<f64>, EigenError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(EigenError::BadTolerance(tol));
    }
    let asym = m.max_asymmetry();
    if asym > SYMMETRY_LIMIT {
        return Err(EigenError::NotSymmetric(asym));
    }

    let n = m.n();
    let mut a = m.entries().to_vec();
    let frob = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    let target = tol * frob;

    // d carries the running diagonal; b/z accumulate rotation corrections
    // per sweep, which keeps the diagonal update numerically tame.
    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    let mut off = off_frobenius(&a, n);
    for sweep in 0..SWEEP_BUDGET {
        if off.0 <= target {
            return Ok(sorted_desc(d));
        }
        let thresh = if sweep < 3 { 0.2 * off.1 / (n * n) as f64 } else { 0.0 };

        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                if sweep >= 4
                    && d[p].abs() + g == d[p].abs()
                    && d[q].abs() + g == d[q].abs()
                {
                    // negligible against both diagonal entries: annihilate
                    a[p * n + q] = 0.0;
                    continue;
                }
                if apq.abs() <= thresh {
                    continue;
                }

                let diff = d[q] - d[p];
                let t = if diff.abs() + g == diff.abs() {
                    apq / diff
                } else {
                    let theta = 0.5 * diff / apq;
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;

                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a[p * n + q] = 0.0;

                // three index ranges keep every touched element in the
                // upper triangle
                for j in 0..p {
                    rotate(&mut a, n, j, p, j, q, s, tau);
                }
                for j in (p + 1)..q {
                    rotate(&mut a, n, p, j, j, q, s, tau);
                }
                for j in (q + 1)..n {
                    rotate(&mut a, n, p, j, q, j, s, tau);
                }
            }
        }

        for p in 0..n {
            b[p] += z[p];
            z[p] = 0.0;
            d[p] = b[p];
        }
        off = off_frobenius(&a, n);
    }

    if off.0 <= target {
        return Ok(sorted_desc(d));
    }
    Err(EigenError::NoConvergence { sweeps: SWEEP_BUDGET, off: off.0, target })
}

#[inline]
#[allow(clippy::too_many_arguments)]
fn rotate(a: &mut [f64], n: usize, i: usize, j: usize, k: usize, l: usize, s: f64, tau: f64) {
    let g = a[i * n + j];
    let h = a[k * n + l];
    a[i * n + j] = g - s * (h + g * tau);
    a[k * n + l] = h + s * (g - h * tau);
}

/// (Frobenius norm of the off-diagonal part, sum of |a_pq| over the upper triangle).
fn off_frobenius(a: &[f64], n: usize) -> (f64, f64) {
    let mut sq = 0.0;
    let mut abs = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            let v = a[p * n + q];
            sq += 2.0 * v * v;
            abs += v.abs();
        }
    }
    (sq.sqrt(), abs)
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
    v
}

/// Verdict of the doubly-stochastic check, with the raw deviations that
/// produced it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StochasticityReport {
    pub symmetric_ok: bool,
    pub nonneg_ok: bool,
    pub rowsum_ok: bool,
    pub colsum_ok: bool,
    pub max_rowsum_dev: f64,
    pub min_entry: f64,
}

impl StochasticityReport {
    pub fn pass(&self) -> bool {
        self.symmetric_ok && self.nonneg_ok && self.rowsum_ok && self.colsum_ok
    }
}

/// Checks symmetry, entry-wise non-negativity (`entry >= -entry_tol`) and
/// unit row/column sums (`|sum - 1| <= sum_tol`).
pub fn is_doubly_stochastic(
    m: &DenseSymMatrix,
    entry_tol: f64,
    sum_tol: f64,
) -> StochasticityReport {
    assert!(entry_tol > 0.0 && sum_tol > 0.0, "tolerances must be positive");
    let n = m.n();
    let min_entry = m.min_entry();
    let max_asym = m.max_asymmetry();
    let mut max_rowsum_dev = 0.0f64;
    let mut max_colsum_dev = 0.0f64;
    for i in 0..n {
        let row: f64 = m.row(i).iter().sum();
        let col: f64 = (0..n).map(|r| m.get(r, i)).sum();
        max_rowsum_dev = max_rowsum_dev.max((row - 1.0).abs());
        max_colsum_dev = max_colsum_dev.max((col - 1.0).abs());
    }
    StochasticityReport {
        symmetric_ok: max_asym <= entry_tol,
        nonneg_ok: min_entry >= -entry_tol,
        rowsum_ok: max_rowsum_dev <= sum_tol,
        colsum_ok: max_colsum_dev <= sum_tol,
        max_rowsum_dev,
        min_entry,
    }
}

/// Outcome of [`spectrum_roundtrip`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RoundTrip {
    pub ok: bool,
    /// Largest |prescribed - recovered| after sorting both lists.
    pub max_error: f64,
}

/// Recovers the eigenvalues of the constructed matrix and pairs them against
/// the prescribed spectrum by sorting both sides (which also handles the
/// doubly degenerate walk eigenvalues).
pub fn spectrum_roundtrip(s: &Spectrum, tol: f64) -> Result<RoundTrip, EigenError> {
    let matrix = construct(s);
    let recovered = sym_eigenvalues(&matrix, EIGEN_TOLERANCE)?;
    let mut prescribed = s.values().to_vec();
    prescribed.sort_by(|x, y| y.partial_cmp(x).expect("spectrum values are finite"));
    let max_error = prescribed
        .iter()
        .zip(&recovered)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    Ok(RoundTrip { ok: max_error <= tol, max_error })
}
