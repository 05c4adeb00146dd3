//! Deterministic seeded randomness.
//!
//! Every randomized operation in this workspace draws from a [`SeedStream`]
//! keyed by explicit integers, so identical seeds reproduce identical runs on
//! any platform. Streams for distinct keys (worker index, prime, trial index)
//! are derived by mixing rather than by sharing state, which makes parallel
//! workers coordination-free.

/// SplitMix64 finalizer. Full-period on 64-bit state, passes BigCrush.
#[inline]
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A deterministic stream of pseudo-random 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedStream {
    state: u64,
}

impl SeedStream {
    pub fn new(seed: u64) -> Self {
        SeedStream { state: seed }
    }

    /// Derive an independent stream keyed by `(seed, parts...)`.
    ///
    /// Used as the counter-based scheme for trial sampling: the stream for
    /// `(master seed, ell, trial)` never touches any other stream's state.
    pub fn derive(seed: u64, parts: &[u64]) -> Self {
        let mut state = seed;
        let _ = splitmix64(&mut state);
        for &p in parts {
            state ^= p.wrapping_mul(0xD6E8_FEB8_6659_FD93);
            let _ = splitmix64(&mut state);
        }
        SeedStream { state }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        splitmix64(&mut self.state)
    }

    /// Uniform draw from `[0, bound)` by power-of-two rejection; exactly
    /// uniform, no modulo bias.
    #[inline]
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        if bound == 1 {
            return 0;
        }
        let bits = 64 - (bound - 1).leading_zeros();
        loop {
            let r = self.next_u64() >> (64 - bits);
            if r < bound {
                return r;
            }
        }
    }
}
