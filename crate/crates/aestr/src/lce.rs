//! Longest common extension queries via suffix array + LCP array + sparse-table RMQ.
//!
//! Construction is O(n log^2 n) (rank doubling with comparison sort); queries
//! are O(1). Only the query bound matters for the after-edit guarantees.

use crate::text::Text;

/// Constant-time `lcp(T[i..], T[j..])` after preprocessing.
#[derive(Debug)]
pub struct LceIndex {
    n: usize,
    /// suffix start positions (1-based values), in lexicographic order
    sa: Vec<u32>,
    /// inverse permutation: `isa[pos-1]` = rank of the suffix at `pos`
    isa: Vec<u32>,
    /// `lcp[r]` = lcp of the suffixes ranked `r` and `r+1` (0-based ranks)
    lcp: Vec<u32>,
    rmq: SparseTable,
}

impl LceIndex {
    pub fn build(text: &Text) -> Self {
        let s = text.bytes();
        let n = s.len();
        assert!(n < u32::MAX as usize, "texts are limited to u32 positions");
        let sa = suffix_array(s);
        let mut isa = vec![0u32; n];
        for (rank, &pos) in sa.iter().enumerate() {
            isa[pos as usize] = rank as u32;
        }
        let lcp = kasai(s, &sa, &isa);
        let rmq = SparseTable::new(&lcp);
        LceIndex {
            n,
            sa: sa.iter().map(|&p| p + 1).collect(),
            isa,
            lcp,
            rmq,
        }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.n
    }

    /// Suffix array with 1-based position values.
    pub fn suffix_array(&self) -> &[u32] {
        &self.sa
    }

    pub fn lcp_array(&self) -> &[u32] {
        &self.lcp
    }

    /// Rank of the suffix starting at 1-based position `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.isa[i - 1] as usize
    }

    /// `lcp(T[i..], T[j..])` for 1-based `i`, `j`. Positions `n+1` are treated
    /// as the empty suffix.
    #[inline]
    pub fn lce(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i <= self.n + 1 && 1 <= j && j <= self.n + 1);
        if i == j {
            return self.n + 1 - i;
        }
        if i > self.n || j > self.n {
            return 0;
        }
        let (a, b) = {
            let ra = self.isa[i - 1];
            let rb = self.isa[j - 1];
            if ra < rb {
                (ra, rb)
            } else {
                (rb, ra)
            }
        };
        self.rmq.min(a as usize, b as usize - 1) as usize
    }
}

/// Rank-doubling suffix array over octets; returns 0-based start positions.
fn suffix_array(s: &[u8]) -> Vec<u32> {
    let n = s.len();
    if n == 1 {
        return vec![0];
    }
    let mut sa: Vec<u32> = (0..n as u32).collect();
    let mut rank: Vec<u32> = s.iter().map(|&b| b as u32).collect();
    let mut next = vec![0u32; n];
    let mut k = 1usize;
    loop {
        let key = |i: u32| -> (u32, u32) {
            let i = i as usize;
            let hi = rank[i];
            let lo = if i + k < n { rank[i + k] + 1 } else { 0 };
            (hi, lo)
        };
        sa.sort_unstable_by_key(|&i| key(i));
        next[sa[0] as usize] = 0;
        for w in 1..n {
            let prev = sa[w - 1];
            let cur = sa[w];
            next[cur as usize] =
                next[prev as usize] + if key(prev) == key(cur) { 0 } else { 1 };
        }
        std::mem::swap(&mut rank, &mut next);
        if rank[sa[n - 1] as usize] as usize == n - 1 {
            break;
        }
        k <<= 1;
    }
    sa
}

/// Kasai's LCP construction, O(n).
fn kasai(s: &[u8], sa: &[u32], isa: &[u32]) -> Vec<u32> {
    let n = s.len();
    if n <= 1 {
        return Vec::new();
    }
    let mut lcp = vec![0u32; n - 1];
    let mut h = 0usize;
    for i in 0..n {
        let r = isa[i] as usize;
        if r + 1 == n {
            h = 0;
            continue;
        }
        let j = sa[r + 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Idempotent range-minimum over a static array: O(n log n) space, O(1) query.
#[derive(Debug)]
struct SparseTable {
    n: usize,
    rows: Vec<u32>,
}

impl SparseTable {
    fn new(a: &[u32]) -> Self {
        let n = a.len();
        if n == 0 {
            return SparseTable { n, rows: Vec::new() };
        }
        let levels = n.ilog2() as usize + 1;
        let mut rows = vec![0u32; n * levels];
        rows[..n].copy_from_slice(a);
        for lvl in 1..levels {
            let half = 1usize << (lvl - 1);
            for i in 0..=(n - (1 << lvl)) {
                rows[lvl * n + i] =
                    rows[(lvl - 1) * n + i].min(rows[(lvl - 1) * n + i + half]);
            }
        }
        SparseTable { n, rows }
    }

    /// Minimum over the inclusive index range `[l, r]`.
    #[inline]
    fn min(&self, l: usize, r: usize) -> u32 {
        debug_assert!(l <= r && r < self.n);
        let lvl = (r - l + 1).ilog2() as usize;
        self.rows[lvl * self.n + l].min(self.rows[lvl * self.n + r + 1 - (1 << lvl)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_sa(s: &[u8]) -> Vec<u32> {
        let mut idx: Vec<u32> = (1..=s.len() as u32).collect();
        idx.sort_by(|&a, &b| s[a as usize - 1..].cmp(&s[b as usize - 1..]));
        idx
    }

    fn naive_lcp(s: &[u8], i: usize, j: usize) -> usize {
        s[i - 1..].iter().zip(&s[j - 1..]).take_while(|(a, b)| a == b).count()
    }

    #[test]
    fn sa_fixtures() {
        let t = Text::new(b"abaababa".to_vec()).unwrap();
        let idx = LceIndex::build(&t);
        assert_eq!(idx.suffix_array(), &[8, 3, 6, 1, 4, 7, 2, 5]);
        assert_eq!(idx.suffix_array(), naive_sa(t.bytes()).as_slice());

        let t = Text::new(b"aaa".to_vec()).unwrap();
        assert_eq!(LceIndex::build(&t).suffix_array(), &[3, 2, 1]);

        let t = Text::new(b"b".to_vec()).unwrap();
        assert_eq!(LceIndex::build(&t).suffix_array(), &[1]);
    }

    #[test]
    fn lce_fixtures() {
        let t = Text::new(b"abaababa".to_vec()).unwrap();
        let idx = LceIndex::build(&t);
        assert_eq!(idx.lce(1, 4), 3);
        assert_eq!(idx.lce(5, 5), 4);
        assert_eq!(idx.lce(2, 5), 2);
        assert_eq!(idx.lce(5, 2), 2);
        assert_eq!(idx.lce(9, 1), 0); // empty suffix
    }

    #[test]
    fn exhaustive_small() {
        // all binary strings up to length 8: suffix array sortedness + lce equivalence
        for n in 1..=8usize {
            for bits in 0..(1u32 << n) {
                let s: Vec<u8> =
                    (0..n).map(|k| if bits >> k & 1 == 1 { b'b' } else { b'a' }).collect();
                let t = Text::new(s.clone()).unwrap();
                let idx = LceIndex::build(&t);
                assert_eq!(idx.suffix_array(), naive_sa(&s).as_slice());
                for i in 1..=n {
                    for j in 1..=n {
                        assert_eq!(idx.lce(i, j), naive_lcp(&s, i, j), "lce({i},{j}) on {s:?}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn lce_matches_naive(s in proptest::collection::vec(0u8..3, 1..300)) {
            let t = Text::new(s.clone()).unwrap();
            let idx = LceIndex::build(&t);
            let n = s.len();
            // permutation + adjacent-suffix sortedness
            let mut seen = vec![false; n];
            for &p in idx.suffix_array() {
                seen[p as usize - 1] = true;
            }
            prop_assert!(seen.iter().all(|&x| x));
            for w in idx.suffix_array().windows(2) {
                prop_assert!(s[w[0] as usize - 1..] < s[w[1] as usize - 1..]);
            }
            for i in 1..=n.min(40) {
                for j in (1..=n).step_by(7) {
                    prop_assert_eq!(idx.lce(i, j), naive_lcp(&s, i, j));
                    prop_assert_eq!(idx.lce(i, j), idx.lce(j, i));
                }
                prop_assert_eq!(idx.lce(i, i), n - i + 1);
            }
        }
    }
}
