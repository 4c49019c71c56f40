//! Deterministic test-corpus generators: uniform random strings, highly
//! periodic strings, and Fibonacci-word prefixes.

use crate::edit::EditOp;
use rand::Rng;

/// Prefix of the infinite Fibonacci word over {a, b}.
pub fn fibonacci_word(len: usize) -> Vec<u8> {
    assert!(len > 0);
    let mut prev: Vec<u8> = b"b".to_vec();
    let mut cur: Vec<u8> = b"a".to_vec();
    while cur.len() < len {
        let next = [cur.as_slice(), prev.as_slice()].concat();
        prev = cur;
        cur = next;
    }
    cur.truncate(len);
    cur
}

/// `block` repeated and truncated to `len`, with the final character flipped
/// when `perturb` is set (keeps the period high while breaking exactness).
pub fn high_period(len: usize, block: &[u8], perturb: bool) -> Vec<u8> {
    assert!(len > 0 && !block.is_empty());
    let mut out: Vec<u8> = block.iter().copied().cycle().take(len).collect();
    if perturb {
        let last = out[len - 1];
        out[len - 1] = if last == b'a' { b'b' } else { b'a' };
    }
    out
}

/// Uniform random string over the first `sigma` letters of the alphabet.
pub fn uniform_random(len: usize, sigma: u8, rng: &mut impl Rng) -> Vec<u8> {
    assert!(len > 0 && sigma >= 1);
    (0..len).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
}

/// A random valid edit on a text of length `n` with `|w| <= max_w`, never
/// producing an empty edited string.
pub fn random_edit(n: usize, max_w: usize, sigma: u8, rng: &mut impl Rng) -> EditOp {
    loop {
        let kind = rng.gen_range(0..3u8);
        let op = match kind {
            0 => {
                // insertion
                let i = rng.gen_range(1..=n + 1);
                let wlen = rng.gen_range(1..=max_w.max(1));
                EditOp::insert(i, uniform_random(wlen, sigma, rng))
            }
            1 => {
                // deletion
                let i = rng.gen_range(1..=n);
                let j = rng.gen_range(i..=n.min(i + max_w.max(1)));
                EditOp::delete(i, j)
            }
            _ => {
                // substitution
                let i = rng.gen_range(1..=n);
                let j = rng.gen_range(i..=n.min(i + max_w.max(1)));
                let wlen = rng.gen_range(0..=max_w);
                EditOp::substitute(i, j, uniform_random(wlen.max(1), sigma, rng))
            }
        };
        if op.n_prime(n) > 0 {
            return op;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_prefix() {
        assert_eq!(fibonacci_word(1), b"a");
        assert_eq!(fibonacci_word(13), b"abaababaabaab");
        let f = fibonacci_word(100);
        assert_eq!(&fibonacci_word(250)[..100], f.as_slice());
    }

    #[test]
    fn high_period_shapes() {
        assert_eq!(high_period(7, b"ab", false), b"abababa");
        assert_eq!(high_period(7, b"ab", true), b"abababb");
    }
}
