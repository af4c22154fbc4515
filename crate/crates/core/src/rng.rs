//! Small deterministic pseudo-random generator.
//!
//! Randomized subroutines (Pollard rho, equal-degree splitting, generic
//! coordinate shifts) must be reproducible per seed, so they all draw from
//! this splitmix64 generator instead of a global RNG.

/// Splitmix64 stream. Identical seeds give identical streams on every
/// platform.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        // Rejection sampling keeps the distribution exact.
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    /// Uniform signed value in `-span..=span`.
    pub fn signed(&mut self, span: u64) -> i64 {
        self.below(2 * span + 1) as i64 - span as i64
    }

    /// Derive an independent child stream.
    pub fn fork(&mut self) -> SplitMix64 {
        SplitMix64::new(self.next_u64() ^ 0xa076_1d64_78bd_642f)
    }
}
