//! Random generation of symmetric doubly stochastic matrices through random
//! spectra.
//!
//! Draw `X_1, ..., X_{n-1}` independently from a distribution on `[0, 1]`,
//! normalize by their sum and scale by `alpha`:
//!
//! ```text
//! lambda_i = alpha * X_i / (X_1 + ... + X_{n-1})
//! ```
//!
//! The tail then sums to `alpha` (up to rounding), so for any
//! `alpha in [-1/2, 1/2]` the constructed matrix is doubly stochastic by
//! the sufficient tail-sum bounds, whichever sign `alpha` has.

use serde::Serialize;
use thiserror::Error;

use crate::constructor::construct;
use crate::matrix::DenseSymMatrix;
use crate::rng::SplitMix64;
use crate::spectrum::Spectrum;

/// Give up if the draws sum to zero this many times in a row.
const MAX_REDRAWS: u32 = 64;

#[derive(Debug, Error, PartialEq)]
pub enum GenError {
    #[error("generation needs n >= 2, got {0}")]
    TooSmall(usize),
    #[error("alpha must lie in [-1/2, 1/2], got {0}")]
    BadAlpha(f64),
    #[error("draws summed to zero {MAX_REDRAWS} times in a row")]
    DegenerateSum,
}

/// Source distribution for the raw draws, supported on `[0, 1]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum Distribution {
    #[default]
    Uniform01,
    /// Square of a uniform draw: skewed toward zero, still on `[0, 1]`.
    SquaredUniform,
}

impl Distribution {
    fn draw(self, rng: &mut SplitMix64) -> f64 {
        let u = rng.next_f64();
        match self {
            Distribution::Uniform01 => u,
            Distribution::SquaredUniform => u * u,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GenConfig {
    pub n: usize,
    pub alpha: f64,
    pub seed: u64,
    pub distribution: Distribution,
}

impl GenConfig {
    pub fn new(
        n: usize,
        alpha: f64,
        seed: u64,
        distribution: Distribution,
    ) -> Result<Self, GenError> {
        if n < 2 {
            return Err(GenError::TooSmall(n));
        }
        if alpha.is_nan() || alpha.abs() > 0.5 {
            return Err(GenError::BadAlpha(alpha));
        }
        Ok(Self { n, alpha, seed, distribution })
    }
}

/// Random spectrum `(1, alpha*X_1/S, ..., alpha*X_{n-1}/S)`.
pub fn random_spectrum(cfg: &GenConfig) -> Result<Spectrum, GenError> {
    let mut rng = SplitMix64::new(cfg.seed);
    for _ in 0..MAX_REDRAWS {
        let draws: Vec<f64> = (0..cfg.n - 1).map(|_| cfg.distribution.draw(&mut rng)).collect();
        let total: f64 = draws.iter().sum();
        if total <= 0.0 {
            continue;
        }
        let mut values = Vec::with_capacity(cfg.n);
        values.push(1.0);
        values.extend(draws.iter().map(|x| cfg.alpha * x / total));
        return Ok(Spectrum::new(values).expect("scaled draws stay within [-1/2, 1/2]"));
    }
    Err(GenError::DegenerateSum)
}

/// Constructs the matrix for [`random_spectrum`]; doubly stochastic for
/// every valid configuration.
pub fn random_matrix(cfg: &GenConfig) -> Result<DenseSymMatrix, GenError> {
    Ok(construct(&random_spectrum(cfg)?))
}
