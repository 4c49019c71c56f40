//! The immutable input text and per-string prefix tables (Z arrays).
//!
//! Positions are 1-based everywhere in this crate, matching the usual
//! stringology convention; `T[i..j]` with `i > j` denotes the empty string.

use crate::error::{Error, Result};

/// An immutable octet string of length `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    data: Vec<u8>,
}

impl Text {
    /// Builds a text from raw octets. Fails on empty input.
    pub fn new(data: impl Into<Vec<u8>>) -> Result<Self> {
        let data = data.into();
        if data.is_empty() {
            return Err(Error::EmptyText);
        }
        Ok(Text { data })
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Character at 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> u8 {
        debug_assert!(1 <= i && i <= self.data.len());
        self.data[i - 1]
    }

    pub fn bytes(&self) -> &[u8] {
        &self.data
    }

    /// The factor `T[i..j]`, empty when `i > j`.
    pub fn factor(&self, i: usize, j: usize) -> &[u8] {
        if i > j {
            &[]
        } else {
            &self.data[i - 1..j]
        }
    }

    /// The text with octets in reverse order.
    pub fn reversed(&self) -> Text {
        let mut data = self.data.clone();
        data.reverse();
        Text { data }
    }
}

/// Prefix table (Z array) of a string `S`: `z[i] = lcp(S, S[i..])` for
/// `2 <= i <= |S|`, with `z[1] = |S|` by convention.
#[derive(Debug, Clone)]
pub struct PrefixTable {
    /// 1-based; slot 0 is unused.
    z: Vec<usize>,
}

impl PrefixTable {
    /// Z-algorithm; linear time, uses only equality comparisons so it works
    /// over a general unordered alphabet.
    pub fn build(s: &[u8]) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyText);
        }
        let n = s.len();
        let mut z = vec![0usize; n + 1];
        z[1] = n;
        // [l, r) is the rightmost match window found so far (0-based half-open).
        let (mut l, mut r) = (0usize, 0usize);
        for i in 1..n {
            let mut k = if i < r { (z[i - l + 1]).min(r - i) } else { 0 };
            while i + k < n && s[k] == s[i + k] {
                k += 1;
            }
            z[i + 1] = k;
            if i + k > r {
                l = i;
                r = i + k;
            }
        }
        Ok(PrefixTable { z })
    }

    pub fn source_len(&self) -> usize {
        self.z.len() - 1
    }

    /// `z[i]` for 1-based `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.z[i]
    }

    pub fn values(&self) -> &[usize] {
        &self.z[1..]
    }
}
