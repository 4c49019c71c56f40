//! Border array `B`, border-group array `BG`, their online extension along an
//! appended string `w`, and arithmetic-progression enumeration of border
//! groups.
//!
//! `B[i]` is the length of the longest border of `T[1..i]` (`B[0] = 0`).
//! `BG[i]` is the length of the shortest border of `T[1..i]` whose smallest
//! period equals `per(T[1..i]) = i - B[i]`, or `i` when no border qualifies.

use crate::error::{Error, Result};
use crate::text::Text;

#[derive(Debug)]
pub struct BorderArrays {
    n: usize,
    b: Vec<usize>,
    bg: Vec<usize>,
    /// `max_border_at_most[k]` = longest border of the whole text with length <= k
    max_border_at_most: Vec<usize>,
}

impl BorderArrays {
    pub fn build(text: &Text) -> Self {
        let n = text.len();
        let mut b = vec![0usize; n + 1];
        for i in 2..=n {
            let c = text.at(i);
            let mut x = b[i - 1];
            while x > 0 && text.at(x + 1) != c {
                x = b[x];
            }
            b[i] = if text.at(x + 1) == c { x + 1 } else { 0 };
        }

        let mut bg = vec![0usize; n + 1];
        if n >= 1 {
            bg[1] = 1;
        }
        for i in 2..=n {
            let p = i - b[i];
            let q = b[i] - b[b[i]];
            bg[i] = if b[i] > 0 && p == q { bg[b[i]] } else { i };
        }

        // one pass over the border chain of the full text
        let mut is_border = vec![false; n + 1];
        let mut x = b[n];
        while x > 0 {
            is_border[x] = true;
            x = b[x];
        }
        let mut max_border_at_most = vec![0usize; n + 1];
        for k in 1..=n {
            max_border_at_most[k] = if is_border[k] { k } else { max_border_at_most[k - 1] };
        }

        BorderArrays {
            n,
            b,
            bg,
            max_border_at_most,
        }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.n
    }

    /// `B[i]` for `0 <= i <= n`.
    #[inline]
    pub fn border(&self, i: usize) -> usize {
        self.b[i]
    }

    /// `BG[i]` for `1 <= i <= n`.
    #[inline]
    pub fn group_first(&self, i: usize) -> usize {
        self.bg[i]
    }

    pub fn border_array(&self) -> &[usize] {
        &self.b[1..]
    }

    pub fn group_array(&self) -> &[usize] {
        &self.bg[1..]
    }

    /// Longest border of the whole text of length at most `k`; O(1).
    #[inline]
    pub fn longest_border_at_most(&self, k: usize) -> usize {
        self.max_border_at_most[k.min(self.n)]
    }

    /// Border groups of `T[1..q]`, periods strictly decreasing.
    pub fn border_groups(&self, q: usize) -> Result<Vec<BorderGroup>> {
        if q < 1 || q > self.n {
            return Err(Error::out_of_range("q", q, 1, self.n));
        }
        Ok(collect_groups(&Layered { base: self, ext: None }, q))
    }
}

/// One maximal set of borders sharing the same smallest period; lengths form
/// the arithmetic progression `shortest, shortest + period, .., longest`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BorderGroup {
    pub longest: usize,
    pub shortest: usize,
    pub period: usize,
    pub count: usize,
}

impl BorderGroup {
    /// Whether `len` is a member of this group's progression.
    pub fn contains(&self, len: usize) -> bool {
        len >= self.shortest
            && len <= self.longest
            && (len - self.shortest).is_multiple_of(self.period)
    }

    /// Largest member `<= cap`, if any.
    pub fn largest_at_most(&self, cap: usize) -> Option<usize> {
        if cap < self.shortest {
            return None;
        }
        Some((self.shortest + ((cap - self.shortest) / self.period) * self.period).min(self.longest))
    }
}

/// The last `|w|` entries of `B(Lw)` and `BG(Lw)` where `L = T[1..l_len]`,
/// computed online from the base arrays. Per-query scratch.
#[derive(Debug)]
pub struct BorderExtension<'a> {
    base: &'a BorderArrays,
    l_len: usize,
    w: Vec<u8>,
    b_ext: Vec<usize>,
    bg_ext: Vec<usize>,
    /// worst number of border-link probes spent on a single appended character
    pub max_chain_per_char: usize,
    /// total border-link probes over the whole extension
    pub total_chain_jumps: u64,
}

impl<'a> BorderExtension<'a> {
    /// Extends the border arrays of `L = text[1..l_len]` by `w`.
    ///
    /// A mismatch after the longest border of a group is followed by one probe
    /// at the second-longest member; every other member of the group is
    /// followed by the same character as that one, so the scan then jumps to
    /// the next group. This keeps each appended character at O(log n) probes.
    pub fn build(text: &Text, base: &'a BorderArrays, l_len: usize, w: impl Into<Vec<u8>>) -> Self {
        let w = w.into();
        debug_assert!(l_len <= text.len());
        let mut ext = BorderExtension {
            base,
            l_len,
            w,
            b_ext: Vec::new(),
            bg_ext: Vec::new(),
            max_chain_per_char: 0,
            total_chain_jumps: 0,
        };
        ext.b_ext.reserve(ext.w.len());
        ext.bg_ext.reserve(ext.w.len());

        for t in 1..=ext.w.len() {
            let i = l_len + t;
            let c = ext.w[t - 1];
            let char_at = |q: usize| -> u8 {
                if q <= l_len {
                    text.at(q)
                } else {
                    ext.w[q - l_len - 1]
                }
            };
            let mut jumps = 0usize;
            let mut x = ext.b_at(i - 1);
            let bi = loop {
                jumps += 1;
                if i == 1 {
                    break 0;
                }
                if x == 0 {
                    break if char_at(1) == c { 1 } else { 0 };
                }
                if char_at(x + 1) == c {
                    break x + 1;
                }
                let g = ext.bg_at(x);
                if g < x {
                    // second-longest member of x's group
                    let y = ext.b_at(x);
                    jumps += 1;
                    if char_at(y + 1) == c {
                        break y + 1;
                    }
                    x = ext.b_at(g);
                } else {
                    x = ext.b_at(x);
                }
            };
            ext.b_ext.push(bi);
            let bgi = {
                let p = i - bi;
                let q = bi - ext.b_at(bi);
                if bi > 0 && p == q {
                    ext.bg_at(bi)
                } else {
                    i
                }
            };
            ext.bg_ext.push(bgi);
            ext.max_chain_per_char = ext.max_chain_per_char.max(jumps);
            ext.total_chain_jumps += jumps as u64;
        }
        ext
    }

    pub fn l_len(&self) -> usize {
        self.l_len
    }

    pub fn w_len(&self) -> usize {
        self.w.len()
    }

    pub fn lw_len(&self) -> usize {
        self.l_len + self.w.len()
    }

    /// `B(Lw)[q]` for `0 <= q <= |Lw|`.
    #[inline]
    pub fn b_at(&self, q: usize) -> usize {
        if q <= self.l_len {
            self.base.b[q]
        } else {
            self.b_ext[q - self.l_len - 1]
        }
    }

    /// `BG(Lw)[q]` for `1 <= q <= |Lw|`.
    #[inline]
    pub fn bg_at(&self, q: usize) -> usize {
        if q <= self.l_len {
            self.base.bg[q]
        } else {
            self.bg_ext[q - self.l_len - 1]
        }
    }

    pub fn b_ext(&self) -> &[usize] {
        &self.b_ext
    }

    pub fn bg_ext(&self) -> &[usize] {
        &self.bg_ext
    }

    /// Border groups of `(Lw)[1..q]`, periods strictly decreasing.
    pub fn border_groups(&self, q: usize) -> Result<Vec<BorderGroup>> {
        if q < 1 || q > self.lw_len() {
            return Err(Error::out_of_range("q", q, 1, self.lw_len()));
        }
        Ok(collect_groups(
            &Layered {
                base: self.base,
                ext: Some(self),
            },
            q,
        ))
    }
}

struct Layered<'a> {
    base: &'a BorderArrays,
    ext: Option<&'a BorderExtension<'a>>,
}

impl Layered<'_> {
    #[inline]
    fn b_at(&self, q: usize) -> usize {
        match self.ext {
            Some(e) => e.b_at(q),
            None => self.base.b[q],
        }
    }

    #[inline]
    fn bg_at(&self, q: usize) -> usize {
        match self.ext {
            Some(e) => e.bg_at(q),
            None => self.base.bg[q],
        }
    }
}

/// Walks the border chain of the length-`q` prefix, emitting one group per
/// distinct smallest period. The multiset union of the emitted progressions
/// is exactly the set of non-empty borders.
fn collect_groups(view: &Layered<'_>, q: usize) -> Vec<BorderGroup> {
    let mut out = Vec::new();
    let mut x = view.b_at(q);
    while x > 0 {
        let p = x - view.b_at(x);
        let g = view.bg_at(x);
        if g == x {
            out.push(BorderGroup {
                longest: x,
                shortest: x,
                period: p,
                count: 1,
            });
        } else {
            debug_assert!(g < x && (x - g).is_multiple_of(p));
            out.push(BorderGroup {
                longest: x,
                shortest: g,
                period: p,
                count: (x - g) / p + 1,
            });
        }
        x = view.b_at(g);
    }
    out
}
