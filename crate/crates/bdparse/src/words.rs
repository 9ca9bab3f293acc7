//! Deterministic string generators used by the benchmark commands and the
//! test corpora: Fibonacci words, Thue-Morse words, unary runs and seeded
//! pseudo-random strings.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Fibonacci word of the given order over {a, b}: order 1 is "b", order 2
/// is "a", and each later word is the previous one followed by the one
/// before it. The length of order k is the k-th Fibonacci number.
pub fn fibonacci(order: u32) -> Vec<u8> {
    assert!(order >= 1, "order must be at least 1");
    assert!(order <= 42, "order {order} would exceed 400 MB");
    let mut prev = vec![b'b'];
    let mut cur = vec![b'a'];
    if order == 1 {
        return prev;
    }
    for _ in 3..=order {
        let mut next = cur.clone();
        next.extend_from_slice(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Thue-Morse word of the given order over {a, b}, length 2^order: start
/// from "a" and repeatedly append the letter-swapped copy.
pub fn thue_morse(order: u32) -> Vec<u8> {
    assert!(order <= 28, "order {order} would exceed 256 MB");
    let mut word = vec![b'a'];
    for _ in 0..order {
        let flipped: Vec<u8> = word
            .iter()
            .map(|&c| if c == b'a' { b'b' } else { b'a' })
            .collect();
        word.extend_from_slice(&flipped);
    }
    word
}

/// A run of one repeated byte.
pub fn run(len: usize, byte: u8) -> Vec<u8> {
    vec![byte; len]
}

/// Seeded pseudo-random string over an alphabet of `sigma` symbols. For
/// sigma up to 26 the symbols are lowercase letters; larger alphabets use
/// raw byte values. The same seed always produces the same bytes.
pub fn random(len: usize, sigma: u16, seed: u64) -> Vec<u8> {
    assert!((1..=256).contains(&sigma), "sigma must be in 1..=256");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len)
        .map(|_| {
            let v = (rng.next_u32() % u32::from(sigma)) as u8;
            if sigma <= 26 {
                b'a' + v
            } else {
                v
            }
        })
        .collect()
}
