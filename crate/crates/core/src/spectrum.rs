//! Candidate spectra: parsing, validation and classification.
//!
//! A spectrum is an ordered list `(1, lambda_1, ..., lambda_{n-1})` of real
//! numbers in `[-1, 1]`. The leading Perron eigenvalue must be exactly 1;
//! everything downstream (construction, feasibility, condition checks) takes
//! the list as given, without sorting. Indices are zero-based here; the
//! classical sufficient conditions in [`crate::conditions`] restate their
//! formulas in the one-based convention those conditions are usually
//! written in.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SpectrumError {
    #[error("empty spectrum")]
    Empty,
    #[error("token {index} ({token:?}) is not a decimal number")]
    BadToken { index: usize, token: String },
    #[error("leading eigenvalue must be exactly 1, got {0}")]
    LeadingNotOne(f64),
    #[error("value {value} at index {index} lies outside [-1, 1]")]
    OutOfRange { index: usize, value: f64 },
}

/// Ordered eigenvalue list with Perron eigenvalue 1 in front.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Validates the invariants: non-empty, `values[0] == 1` exactly, every
    /// entry in the closed interval `[-1, 1]`.
    pub fn new(values: Vec<f64>) -> Result<Self, SpectrumError> {
        if values.is_empty() {
            return Err(SpectrumError::Empty);
        }
        if values[0] != 1.0 {
            return Err(SpectrumError::LeadingNotOne(values[0]));
        }
        for (index, &value) in values.iter().enumerate() {
            if value.is_nan() || value.abs() > 1.0 {
                return Err(SpectrumError::OutOfRange { index, value });
            }
        }
        Ok(Self { values })
    }

    /// Parses a comma-separated decimal list, e.g. `"1,-0.02,-0.03"`.
    /// Surrounding whitespace on each token is ignored.
    pub fn parse(text: &str) -> Result<Self, SpectrumError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(SpectrumError::Empty);
        }
        let mut values = Vec::new();
        for (index, token) in trimmed.split(',').enumerate() {
            let token = token.trim();
            let value: f64 = token.parse().map_err(|_| SpectrumError::BadToken {
                index,
                token: token.to_string(),
            })?;
            values.push(value);
        }
        Self::new(values)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The trailing eigenvalues `lambda_1, ..., lambda_{n-1}`.
    pub fn tail(&self) -> &[f64] {
        &self.values[1..]
    }

    pub fn classify(&self) -> SpectrumClass {
        let mut sum = 0.0;
        let mut all_nonpos = true;
        let mut all_nonneg = true;
        let mut non_increasing = true;
        for (i, &v) in self.tail().iter().enumerate() {
            sum += v;
            all_nonpos &= v <= 0.0;
            all_nonneg &= v >= 0.0;
            if i > 0 {
                non_increasing &= self.values[i] >= v;
            }
        }
        SpectrumClass {
            is_suleimanova: all_nonpos,
            delta: 1.0 + sum,
            is_normalized: non_increasing,
            is_nonnegative_case: all_nonneg,
        }
    }

    /// Checks the trace-moment necessary condition
    /// `1 + lambda_1^k + ... + lambda_{n-1}^k >= 0` for every `k <= max_k`.
    pub fn trace_moment_check(&self, max_k: u32) -> TraceMomentCheck {
        assert!(max_k >= 1, "max_k must be positive");
        for k in 1..=max_k {
            let moment: f64 = 1.0 + self.tail().iter().map(|v| v.powi(k as i32)).sum::<f64>();
            if moment < 0.0 {
                return TraceMomentCheck { ok: false, first_failing_k: Some(k) };
            }
        }
        TraceMomentCheck { ok: true, first_failing_k: None }
    }
}

impl FromStr for Spectrum {
    type Err = SpectrumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// Formats as a comma-separated list using the shortest decimal
/// representation that parses back to the same doubles.
impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// Classification flags for a spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpectrumClass {
    /// All trailing eigenvalues are non-positive.
    pub is_suleimanova: bool,
    /// `1 + lambda_1 + ... + lambda_{n-1}`.
    pub delta: f64,
    /// Trailing eigenvalues are non-increasing.
    pub is_normalized: bool,
    /// All trailing eigenvalues are non-negative.
    pub is_nonnegative_case: bool,
}

/// Outcome of [`Spectrum::trace_moment_check`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TraceMomentCheck {
    pub ok: bool,
    /// Smallest power violating the inequality, when any.
    pub first_failing_k: Option<u32>,
}
