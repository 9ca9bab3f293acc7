//! Shared corpus helpers for the integration suites.
#![allow(dead_code)] // each test binary uses its own subset

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every binary string over {a, b} of length 1..=max_len.
pub fn exhaustive_binary(max_len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for n in 1..=max_len {
        for code in 0u64..(1 << n) {
            out.push(
                (0..n)
                    .map(|k| if code >> k & 1 == 0 { b'a' } else { b'b' })
                    .collect(),
            );
        }
    }
    out
}

/// A random string of length 1..=max_len over `sigma` lowercase letters.
pub fn random_text(rng: &mut ChaCha8Rng, max_len: usize, sigma: u32) -> Vec<u8> {
    let n = rng.next_u32() as usize % max_len + 1;
    (0..n)
        .map(|_| b'a' + (rng.next_u32() % sigma) as u8)
        .collect()
}

/// The corpus shape used throughout: `count` random strings cycling through
/// alphabet sizes 2, 4 and 26.
pub fn random_corpus(seed: u64, count: usize, max_len: usize) -> Vec<Vec<u8>> {
    let mut r = rng(seed);
    (0..count)
        .map(|k| random_text(&mut r, max_len, [2, 4, 26][k % 3]))
        .collect()
}
