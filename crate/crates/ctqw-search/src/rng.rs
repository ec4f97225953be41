//! Deterministic random numbers with a pinned, documented algorithm.
//!
//! Every random choice in this crate flows through [`SplitMix64`] so that a
//! `(seed, n, p)` triple reproduces the same graph on any platform, from any
//! language, forever. The generator and all derivation rules are spelled out
//! below precisely so they can be reimplemented independently:
//!
//! * **State update:** `state += 0x9E3779B97F4A7C15` (wrapping).
//! * **Output mix** (`mix64`): with `z` the new state,
//!   `z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9`,
//!   `z = (z ^ (z >> 27)) * 0x94D049BB133111EB`,
//!   return `z ^ (z >> 31)` (all wrapping).
//! * **Uniform f64 in [0, 1):** `(next_u64() >> 11) as f64 * 2^-53`
//!   (53 uniform mantissa bits).
//! * **Bounded integer:** `next_u64() % n`. The modulo bias is below
//!   `n / 2^64`, irrelevant for the vertex counts used here, and accepted
//!   so the rule stays a one-liner.
//! * **Stream derivation:** `derive_seed(base, parts)` starts from `base`
//!   and folds in each part with
//!   `h = mix64(h + 0x9E3779B97F4A7C15 + part)` (wrapping adds), yielding
//!   independent, collision-resistant sub-streams for (cell, trial,
//!   attempt) coordinates without one global consumption order.

/// SplitMix64 generator (Steele, Lea & Flood's `splitmix64`).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

const GOLDEN_GAMMA: u64 = 0x9E3779B97F4A7C15;

#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Next raw 64-bit output.
    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform double in `[0, 1)` with 53 random bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `0..n`. Panics if `n == 0`.
    #[inline]
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0) is meaningless");
        self.next_u64() % n
    }
}

/// Derive an independent stream seed from a base seed and a coordinate path.
///
/// Used to give every (cell, trial, attempt) its own generator so adding or
/// reordering work never shifts which random numbers a trial sees.
pub fn derive_seed(base: u64, parts: &[u64]) -> u64 {
    let mut h = base;
    for &p in parts {
        h = mix64(h.wrapping_add(GOLDEN_GAMMA).wrapping_add(p));
    }
    h
}
