//! Deterministic 64-bit random number generation.
//!
//! Everything random in this crate (spectrum sampling, feasibility search)
//! flows through [`SplitMix64`] so that a `(seed, index)` pair reproduces the
//! same stream bit-for-bit on every platform and in every language that
//! implements the same two constants. The generator is Steele, Lea and
//! Flanagan's SplitMix64: the state advances by the 64-bit golden-gamma
//! increment and each output is a murmur-style finalizer of the new state.

/// State increment: the odd integer closest to 2^64 / phi.
const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer: bijective mixing of a 64-bit word.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for an independent sub-stream: `index` is folded into the master
/// seed through one gamma step plus the finalizer, so streams for distinct
/// indices never share state. This is the splitting rule used for per-trial
/// and per-matrix seeding throughout the crate.
#[inline]
pub fn derive_seed(master: u64, index: u64) -> u64 {
    mix64(master.wrapping_add(GOLDEN_GAMMA.wrapping_mul(index.wrapping_add(1))))
}

/// SplitMix64 generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Generator for sub-stream `index` of `master`; see [`derive_seed`].
    pub fn split(master: u64, index: u64) -> Self {
        Self::new(derive_seed(master, index))
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform draw in `[0, 1)` with 53 random mantissa bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform draw from `[0, bound)`.
    pub fn next_index(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (self.next_f64() * bound as f64) as usize % bound
    }
}
