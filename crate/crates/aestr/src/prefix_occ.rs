//! Rightmost occurrence of a prefix of `T` inside a window of `T`.
//!
//! This is the specialization of internal pattern matching the cover
//! simulation needs: the pattern is always `T[1..k]`, so an occurrence at `i`
//! is exactly `z[i] >= k`. A max segment tree over the Z array answers
//! "rightmost index in a range with value >= k" in O(log n).

use crate::error::{Error, Result};
use crate::text::{PrefixTable, Text};

#[derive(Debug)]
pub struct PrefixOccIndex {
    n: usize,
    z: PrefixTable,
    /// max segment tree, 1-indexed heap layout over `size` leaves
    tree: Vec<u32>,
    size: usize,
}

impl PrefixOccIndex {
    pub fn build(text: &Text) -> Self {
        let n = text.len();
        let z = PrefixTable::build(text.bytes()).expect("text is non-empty");
        let size = n.next_power_of_two();
        let mut tree = vec![0u32; 2 * size];
        for i in 0..n {
            tree[size + i] = z.at(i + 1) as u32;
        }
        for v in (1..size).rev() {
            tree[v] = tree[2 * v].max(tree[2 * v + 1]);
        }
        PrefixOccIndex { n, z, tree, size }
    }

    pub fn z_values(&self) -> &[usize] {
        self.z.values()
    }

    /// End position of the rightmost occurrence of `T[1..k]` that lies fully
    /// inside the window `T[a..b]`, or `None` if there is no such occurrence.
    pub fn rightend_prefix_in_window(&self, k: usize, a: usize, b: usize) -> Result<Option<usize>> {
        if k < 1 || k > self.n {
            return Err(Error::out_of_range("k", k, 1, self.n));
        }
        if a < 1 || a > b || b > self.n {
            return Err(Error::out_of_range("window", b.max(a), a.max(1), self.n));
        }
        if b - a + 1 < k {
            return Ok(None);
        }
        // occurrence starts live in [a, b-k+1]
        Ok(self
            .rightmost_at_least(1, 1, self.size, a, b - k + 1, k as u32)
            .map(|i| i + k - 1))
    }

    /// Rightmost leaf index (1-based) in `[ql, qr]` with value >= `k`.
    fn rightmost_at_least(
        &self,
        v: usize,
        node_l: usize,
        node_r: usize,
        ql: usize,
        qr: usize,
        k: u32,
    ) -> Option<usize> {
        if qr < node_l || node_r < ql || self.tree[v] < k {
            return None;
        }
        if node_l == node_r {
            return Some(node_l);
        }
        let mid = (node_l + node_r) / 2;
        self.rightmost_at_least(2 * v + 1, mid + 1, node_r, ql, qr, k)
            .or_else(|| self.rightmost_at_least(2 * v, node_l, mid, ql, qr, k))
    }
}
