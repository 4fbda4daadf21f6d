//! Reproducible per-trial RNG substreams.
//!
//! Splittable-counter construction over a 64-bit state: the master seed is
//! xor-folded with an FNV-1a hash of the experiment id, the trial index
//! advances the state by golden-ratio increments, and a SplitMix64 expansion
//! of that state keys a ChaCha8 stream. Streams for distinct
//! (seed, id, index) triples are independent of execution order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}

fn splitmix_next(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GOLDEN);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The RNG for one (master seed, experiment id, trial index) triple.
pub fn derive_substream(master_seed: u64, experiment_id: &str, trial_index: u64) -> ChaCha8Rng {
    let mut state = (master_seed ^ fnv1a(experiment_id.as_bytes()))
        .wrapping_add(trial_index.wrapping_mul(GOLDEN).wrapping_mul(GOLDEN));
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix_next(&mut state).to_le_bytes());
    }
    ChaCha8Rng::from_seed(seed)
}
