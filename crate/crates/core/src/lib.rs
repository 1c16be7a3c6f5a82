//! Symmetric doubly stochastic matrices with prescribed spectra.
//!
//! Given a list `(1, lambda_1, ..., lambda_{n-1})` of reals in `[-1, 1]`,
//! this crate builds the symmetric matrix `Q L Q^T`, where `L` is the
//! diagonal of the list and `Q` is the orthogonal symmetric eigenbasis of
//! the random walk on the n-cycle:
//!
//! ```text
//! Q[j][k] = sqrt(2/n) * sin(2*pi*k*j/n + pi/4)
//! ```
//!
//! The result always has unit row and column sums. When the tail is
//! non-positive and sums to at least `-1/2` (or non-negative and at most
//! `1/2`), every entry is non-negative too, so the matrix is doubly
//! stochastic with exactly the prescribed spectrum. The crate also houses
//! the classical scalar sufficient conditions for this realization problem
//! (Perfect-Mirsky, Soules, the Nader et al. refinements), an in-house
//! symmetric eigensolver that closes the construct-then-verify loop, a
//! randomized search bracketing where the construction stops working, and a
//! random generator of doubly stochastic matrices driven by random spectra.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p sdiep --example realize_spectrum       # construct + verify
//! cargo run -p sdiep --example walk_basis             # the basis and its eigenpairs
//! cargo run -p sdiep --example feasibility_certificate # a spectrum that fails
//! cargo run -p sdiep --example classical_conditions   # condition separation
//! cargo run -p sdiep --example householder_comparison # alternative basis, and why not
//! cargo run -p sdiep --example random_matrices        # random generation
//! cargo run -p sdiep --example delta_threshold_search # bracket the threshold
//! cargo run -p sdiep --example separating_spectra     # feasible but unconditioned
//! ```
//!
//! There is also a thin `sdiep` binary exposing the same capabilities as
//! subcommands (`construct`, `check`, `verify`, `basis`, `random`,
//! `delta-min`, `separate`); see the README for the flag grammar.
//!
//! All types are immutable after construction and all operations are pure
//! functions, safe to call concurrently. Randomized routines take explicit
//! seeds and reproduce their results bit for bit; see [`rng`] for the
//! generator contract.

pub mod cli;
pub mod conditions;
pub mod constructor;
pub mod eigen;
pub mod io;
pub mod matrix;
pub mod randomgen;
pub mod rng;
pub mod rw_basis;
pub mod search;
pub mod spectrum;

pub use conditions::{full_report, ConditionReport, ConditionVerdict};
pub use constructor::{
    construct, construct_via_basis, corollary_bound, feasibility, householder_construct,
    CorollaryBound, FeasibilityCertificate, ENTRY_TOLERANCE,
};
pub use eigen::{
    is_doubly_stochastic, spectrum_roundtrip, sym_eigenvalues, RoundTrip, StochasticityReport,
    EIGEN_TOLERANCE, ROUNDTRIP_TOLERANCE, ROW_SUM_TOLERANCE,
};
pub use matrix::DenseSymMatrix;
pub use randomgen::{random_matrix, random_spectrum, Distribution, GenConfig};
pub use rw_basis::{build_basis, verify_eigenpairs, walk_matrix, OrthonormalBasis, WalkMatrix};
pub use search::{bracket_delta_min, max_s_product, s_value, separating_examples, DeltaBracket};
pub use spectrum::{Spectrum, SpectrumClass};
