//! Random streams.
//!
//! Every estimate runs on xoshiro256++ seeded through SplitMix64 from a
//! 64-bit seed. Trials are cut into fixed chunks of [`CHUNK_TRIALS`]; chunk
//! `c` starts from the seeded state advanced by `c` calls to `jump()`
//! (2^128 steps each), so chunks never overlap and trial `i` always sees the
//! same draws no matter how many threads run.

use rand::RngCore;
use rand::SeedableRng;
use rand_xoshiro::{SplitMix64, Xoshiro256PlusPlus};

pub const CHUNK_TRIALS: u64 = 1 << 14;

/// Starting generators for `chunks` consecutive, non-overlapping chunks.
pub(crate) fn chunk_streams(seed: u64, chunks: u64) -> Vec<Xoshiro256PlusPlus> {
    let mut cursor = Xoshiro256PlusPlus::seed_from_u64(seed);
    (0..chunks)
        .map(|_| {
            let start = cursor.clone();
            cursor.jump();
            start
        })
        .collect()
}

/// Seed for one grid point of a sweep, mixed from the master seed, the
/// index of the SNR point and a metric label.
pub fn derive_seed(master: u64, rho_index: u64, metric_id: &str) -> u64 {
    // FNV-1a over the label, then SplitMix64 to decorrelate nearby inputs.
    let label = metric_id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    });
    let mut mix = SplitMix64::seed_from_u64(master ^ rho_index.rotate_left(32) ^ label);
    mix.next_u64()
}
