//! Seeded randomness. Every random draw in the crate goes through a
//! [`SeedSpec`], which names a ChaCha8 key (from `seed`) and one of its
//! 2^64 independent counter streams (`stream_id`).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedSpec {
    pub seed: u64,
    #[serde(default)]
    pub stream_id: u64,
}

impl SeedSpec {
    pub const fn new(seed: u64, stream_id: u64) -> Self {
        SeedSpec { seed, stream_id }
    }

    pub const fn from_seed(seed: u64) -> Self {
        SeedSpec { seed, stream_id: 0 }
    }

    /// Fresh generator positioned at the start of this stream.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut key = [0u8; 32];
        let mut state = self.seed;
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        let mut rng = ChaCha8Rng::from_seed(key);
        rng.set_stream(self.stream_id);
        rng
    }

    /// Same key, different stream.
    pub const fn with_stream(&self, stream_id: u64) -> Self {
        SeedSpec {
            seed: self.seed,
            stream_id,
        }
    }

    /// A new key derived from this spec and `tag`. Children of distinct
    /// tags (or of distinct parents) are independent for all practical
    /// purposes; the derivation is a fixed function, so it is reproducible.
    pub fn child(&self, tag: u64) -> Self {
        let mut state = self.seed ^ 0xA076_1D64_78BD_642F;
        let a = splitmix64(&mut state);
        let mut state = a ^ self.stream_id.rotate_left(17);
        let b = splitmix64(&mut state);
        let mut state = b ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15);
        SeedSpec {
            seed: splitmix64(&mut state),
            stream_id: 0,
        }
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
