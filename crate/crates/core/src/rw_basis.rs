//! Transition matrix of the symmetric simple random walk on the n-cycle and
//! the orthonormal trigonometric eigenbasis attached to it.
//!
//! The walk matrix is the circulant with first row `(0, 1/2, 0, ..., 0, 1/2)`.
//! Its eigenvalues are `cos(2*pi*k/n)`, and the vectors
//!
//! ```text
//! w_k[j] = sqrt(2/n) * sin(2*pi*k*j/n + pi/4)        k, j in 0..n
//! ```
//!
//! are eigenvectors that form an orthonormal basis of R^n. The matrix `Q`
//! with columns `w_k` is both orthogonal and symmetric; it is the generator
//! every spectrum realization in this crate is built from.

use std::f64::consts::{FRAC_PI_4, TAU};

use serde::Serialize;
use thiserror::Error;

use crate::matrix::DenseSymMatrix;

#[derive(Debug, Error, PartialEq)]
pub enum BasisError {
    #[error("walk matrix needs n >= 3, got {0}")]
    WalkTooSmall(usize),
    #[error("basis needs n >= 1, got {0}")]
    BasisEmpty(usize),
    #[error("dimension mismatch: basis has n = {basis}, walk matrix has n = {walk}")]
    DimensionMismatch { basis: usize, walk: usize },
}

/// `sin(2*pi*(k*j mod n)/n + pi/4)`.
///
/// The index product is reduced modulo `n` in integer arithmetic before the
/// floating multiply, which keeps the argument in `[pi/4, 2*pi + pi/4)` and
/// the sine accurate to a couple of ulps even for n in the hundreds.
#[inline]
pub(crate) fn sin_quarter(n: usize, j: usize, k: usize) -> f64 {
    let a = (k * j) % n;
    (TAU * a as f64 / n as f64 + FRAC_PI_4).sin()
}

/// Transition matrix of the symmetric walk on the n-cycle.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl WalkMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn to_dense(&self) -> DenseSymMatrix {
        DenseSymMatrix::from_entries(self.n, self.entries.clone())
            .expect("walk matrix entries are a valid square matrix")
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n, "dimension mismatch");
        (0..self.n)
            .map(|r| self.row(r).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Builds the cycle-walk matrix. Requires `n >= 3` so the two neighbours of
/// each vertex are distinct; the basis itself ([`build_basis`]) has no such
/// restriction because it never touches the walk matrix.
pub fn walk_matrix(n: usize) -> Result<WalkMatrix, BasisError> {
    if n < 3 {
        return Err(BasisError::WalkTooSmall(n));
    }
    let mut entries = vec![0.0; n * n];
    for r in 0..n {
        entries[r * n + (r + 1) % n] = 0.5;
        entries[r * n + (r + n - 1) % n] = 0.5;
    }
    Ok(WalkMatrix { n, entries })
}

/// Orthogonal symmetric matrix `Q` whose column `k` is the walk eigenvector
/// `w_k`, together with the eigenvalues `cos(2*pi*k/n)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrthonormalBasis {
    n: usize,
    /// Row-major: `q[j*n + k]` is coordinate `j` of column `w_k`.
    q: Vec<f64>,
    eigvals: Vec<f64>,
}

impl OrthonormalBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Coordinate `j` of the eigenvector `w_k`.
    #[inline]
    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.q[j * self.n + k]
    }

    pub fn entries(&self) -> &[f64] {
        &self.q
    }

    pub fn eigvals(&self) -> &[f64] {
        &self.eigvals
    }

    pub fn column(&self, k: usize) -> Vec<f64> {
        (0..self.n).map(|j| self.get(j, k)).collect()
    }
}

/// Fills `Q` by the closed-form entry `sqrt(2/n) sin(2*pi*k*j/n + pi/4)`.
pub fn build_basis(n: usize) -> Result<OrthonormalBasis, BasisError> {
    if n == 0 {
        return Err(BasisError::BasisEmpty(n));
    }
    let scale = (2.0 / n as f64).sqrt();
    let mut q = vec![0.0; n * n];
    for j in 0..n {
        for k in j..n {
            // symmetric in (j, k) because the entry depends on k*j only
            let v = scale * sin_quarter(n, j, k);
            q[j * n + k] = v;
            q[k * n + j] = v;
        }
    }
    // cos(2*pi*k/n) computed for k <= n/2 and mirrored, so the degenerate
    // pair eigvals[k] == eigvals[n-k] holds exactly
    let mut eigvals = vec![0.0; n];
    for k in 0..=n / 2 {
        let v = (TAU * k as f64 / n as f64).cos();
        eigvals[k] = v;
        eigvals[(n - k) % n] = v;
    }
    Ok(OrthonormalBasis { n, q, eigvals })
}

/// True iff `||P w_k - eigval_k w_k||_inf <= tol` for every column `w_k`.
pub fn verify_eigenpairs(
    basis: &OrthonormalBasis,
    walk: &WalkMatrix,
    tol: f64,
) -> Result<bool, BasisError> {
    assert!(tol > 0.0, "tolerance must be positive");
    if basis.n() != walk.n() {
        return Err(BasisError::DimensionMismatch { basis: basis.n(), walk: walk.n() });
    }
    let n = basis.n();
    for k in 0..n {
        let w = basis.column(k);
        let pw = walk.matvec(&w);
        let lambda = basis.eigvals()[k];
        let dev = pw
            .iter()
            .zip(&w)
            .map(|(a, b)| (a - lambda * b).abs())
            .fold(0.0f64, f64::max);
        if dev > tol {
            return Ok(false);
        }
    }
    Ok(true)
}
