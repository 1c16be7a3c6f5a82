//! Dense symmetric matrix storage shared by the construction, verification
//! and eigensolver modules.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MatrixError {
    #[error("entry count {got} does not match {n}x{n}")]
    ShapeMismatch { n: usize, got: usize },
    #[error("matrix must have at least one row")]
    Empty,
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
}

/// An `n x n` real matrix in row-major storage. Intended for symmetric
/// matrices; symmetry is reported by [`DenseSymMatrix::max_asymmetry`]
/// rather than enforced on construction, so that matrices read from files
/// can still be inspected and diagnosed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DenseSymMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DenseSymMatrix {
    pub fn from_entries(n: usize, entries: Vec<f64>) -> Result<Self, MatrixError> {
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        if entries.len() != n * n {
            return Err(MatrixError::ShapeMismatch { n, got: entries.len() });
        }
        if let Some(bad) = entries.iter().position(|v| !v.is_finite()) {
            return Err(MatrixError::NonFinite { row: bad / n, col: bad % n });
        }
        Ok(Self { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![0.0; n * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.n + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.entries[row * self.n + col] = value;
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Largest `|a_kl - a_lk|` over all pairs; zero for exactly symmetric storage.
    pub fn max_asymmetry(&self) -> f64 {
        let mut dev = 0.0f64;
        for k in 0..self.n {
            for l in (k + 1)..self.n {
                dev = dev.max((self.get(k, l) - self.get(l, k)).abs());
            }
        }
        dev
    }

    pub fn min_entry(&self) -> f64 {
        self.entries.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Largest absolute entry-wise difference against `other`.
    pub fn max_abs_diff(&self, other: &DenseSymMatrix) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Matrix-vector product.
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n, "dimension mismatch");
        (0..self.n)
            .map(|r| self.row(r).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}
