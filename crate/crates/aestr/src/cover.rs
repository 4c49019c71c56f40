//! Cover array `C` and range array `R` of the indexed text, plus the
//! per-query structure that simulates `C(Lw)` and `R(Lw)` without rebuilding
//! them.
//!
//! `C[k]` is the length of the shortest cover of `T[1..k]`. `R[k]` holds
//! `range(T, k)` (the largest `r` such that `T[1..k]` covers `T[1..r]`) when
//! `T[1..k]` is superprimitive, and 0 otherwise.

use crate::border::{BorderArrays, BorderExtension};
use crate::error::{Error, Result};
use crate::prefix_occ::PrefixOccIndex;
use crate::stats::QueryStats;

#[derive(Debug)]
pub struct CoverArrays {
    c: Vec<usize>,
    r: Vec<usize>,
}

impl CoverArrays {
    /// The online cover-array algorithm, driven by the border array.
    pub fn build(borders: &BorderArrays) -> Self {
        let n = borders.len();
        let mut c = vec![0usize; n + 1];
        let mut r = vec![0usize; n + 1];
        for idx in 1..=n {
            let clen = c[borders.border(idx)];
            debug_assert!(clen < idx);
            if clen > 0 && r[clen] >= idx - clen {
                c[idx] = clen;
                r[clen] = idx; // T[1..idx] is not superprimitive
            } else {
                c[idx] = idx;
                r[idx] = idx; // T[1..idx] is superprimitive
            }
        }
        CoverArrays { c, r }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.c.len() - 1
    }

    /// `|cov(T[1..k])|` for `1 <= k <= n` (`cov_prefix(0) = 0`).
    #[inline]
    pub fn cov_prefix(&self, k: usize) -> usize {
        self.c[k]
    }

    /// `R[k]`: `range(T, k)` for superprimitive prefixes, 0 otherwise.
    #[inline]
    pub fn range_raw(&self, k: usize) -> usize {
        self.r[k]
    }

    pub fn cover_array(&self) -> &[usize] {
        &self.c[1..]
    }

    pub fn range_array(&self) -> &[usize] {
        &self.r[1..]
    }
}

/// Shared scratch for the simulated range array: kept all-zero between
/// queries, with a touched list so resets cost O(writes), never O(n).
#[derive(Debug, Default)]
pub struct RangeScratch {
    vals: Vec<usize>,
    touched: Vec<usize>,
    /// lifetime instrumentation
    pub total_releases: u64,
    pub max_release: usize,
}

impl RangeScratch {
    pub fn new() -> Self {
        RangeScratch::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        RangeScratch {
            vals: vec![0; n + 1],
            ..RangeScratch::default()
        }
    }

    fn ensure(&mut self, upto: usize) {
        if self.vals.len() <= upto {
            self.vals.resize(upto + 1, 0);
        }
    }

    #[inline]
    fn get(&self, k: usize) -> usize {
        self.vals.get(k).copied().unwrap_or(0)
    }

    #[inline]
    fn set(&mut self, k: usize, v: usize) {
        self.vals[k] = v;
        self.touched.push(k);
    }

    fn release(&mut self) {
        self.total_releases += self.touched.len() as u64;
        self.max_release = self.max_release.max(self.touched.len());
        for &k in &self.touched {
            self.vals[k] = 0;
        }
        self.touched.clear();
    }

    pub fn touched_len(&self) -> usize {
        self.touched.len()
    }

    /// Full sweep; true when every slot is zero.
    pub fn is_clean(&self) -> bool {
        self.touched.is_empty() && self.vals.iter().all(|&v| v == 0)
    }
}

/// Simulates `C(Lw)` and `R(Lw)` on top of the preprocessed arrays of `T`,
/// where `L = T[1..l_len]`.
///
/// Construction replays the cover-array loop over the appended positions
/// only; range values for indices at most `|L|` resolve through `R(T)` or a
/// rightmost-prefix-occurrence window query, values touched by the replay live
/// in the shared scratch. The scratch is restored to all-zero on release (and
/// on drop).
#[derive(Debug)]
pub struct CoverSimulation<'a> {
    covers: &'a CoverArrays,
    pocc: &'a PrefixOccIndex,
    l_len: usize,
    w_len: usize,
    c_w: Vec<usize>,
    rstar: &'a mut RangeScratch,
}

impl<'a> CoverSimulation<'a> {
    /// Replays the cover-array loop over positions `l_len+1 ..= l_len+|w|` of
    /// `Lw`, reading `B(Lw)` from `ext`. O(|w| log n).
    pub fn begin(
        covers: &'a CoverArrays,
        pocc: &'a PrefixOccIndex,
        ext: &BorderExtension<'_>,
        rstar: &'a mut RangeScratch,
        stats: &mut QueryStats,
    ) -> Result<Self> {
        let l_len = ext.l_len();
        let w_len = ext.w_len();
        debug_assert!(l_len <= covers.len());
        debug_assert!(rstar.touched.is_empty(), "scratch must start a query clean");
        rstar.ensure(l_len + w_len);
        let mut sim = CoverSimulation {
            covers,
            pocc,
            l_len,
            w_len,
            c_w: Vec::with_capacity(w_len),
            rstar,
        };
        for t in 1..=w_len {
            let idx = l_len + t;
            let clen = sim.cov_at(ext.b_at(idx));
            debug_assert!(clen < idx);
            let mut extended = false;
            if clen > 0 {
                let r = if sim.rstar.get(clen) != 0 {
                    sim.rstar.get(clen)
                } else if sim.covers.r[clen] <= l_len {
                    sim.covers.r[clen]
                } else {
                    // R(T)[clen] > |L|: the rightmost occurrence of T[1..clen]
                    // within T[1..|L|] covers position |L|-clen+1
                    sim.window_range(clen, stats)?
                };
                if r >= idx - clen {
                    sim.c_w.push(clen);
                    sim.rstar.set(clen, idx); // (Lw)[1..idx] is not superprimitive
                    stats.rstar_writes += 1;
                    extended = true;
                }
            }
            if !extended {
                sim.c_w.push(idx);
                sim.rstar.set(idx, idx); // (Lw)[1..idx] is superprimitive
                stats.rstar_writes += 1;
            }
        }
        Ok(sim)
    }

    pub fn lw_len(&self) -> usize {
        self.l_len + self.w_len
    }

    #[inline]
    fn cov_at(&self, k: usize) -> usize {
        if k <= self.l_len {
            self.covers.c[k]
        } else {
            self.c_w[k - self.l_len - 1]
        }
    }

    fn window_range(&self, k: usize, stats: &mut QueryStats) -> Result<usize> {
        debug_assert!(k >= 1 && k <= self.l_len);
        stats.window_queries += 1;
        let a = (self.l_len + 2).saturating_sub(2 * k).max(1);
        let end = self.pocc.rightend_prefix_in_window(k, a, self.l_len)?;
        Ok(end.expect("an occurrence covers position |L|-k+1 whenever R(T)[k] > |L|"))
    }

    /// `|cov((Lw)[1..k])|`. O(1).
    pub fn cov(&self, k: usize) -> Result<usize> {
        if k < 1 || k > self.lw_len() {
            return Err(Error::out_of_range("k", k, 1, self.lw_len()));
        }
        Ok(self.cov_at(k))
    }

    /// `range(Lw, k)` for a superprimitive prefix `(Lw)[1..k]`.
    pub fn range(&self, k: usize, stats: &mut QueryStats) -> Result<usize> {
        if k < 1 || k > self.lw_len() {
            return Err(Error::out_of_range("k", k, 1, self.lw_len()));
        }
        if self.cov_at(k) != k {
            return Err(Error::NotSuperprimitive { k });
        }
        let cached = self.rstar.get(k);
        if cached != 0 {
            return Ok(cached);
        }
        debug_assert!(
            k <= self.l_len,
            "superprimitive positions beyond |L| always have a scratch entry"
        );
        if self.covers.r[k] <= self.l_len {
            Ok(self.covers.r[k])
        } else {
            self.window_range(k, stats)
        }
    }

    /// Resets every touched scratch slot to zero; idempotent, O(touched).
    pub fn release(&mut self) {
        self.rstar.release();
    }
}

impl Drop for CoverSimulation<'_> {
    fn drop(&mut self) {
        self.release();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::text::Text;

    fn setup(s: &[u8]) -> (Text, BorderArrays, CoverArrays, PrefixOccIndex) {
        let t = Text::new(s.to_vec()).unwrap();
        let b = BorderArrays::build(&t);
        let c = CoverArrays::build(&b);
        let p = PrefixOccIndex::build(&t);
        (t, b, c, p)
    }

    #[test]
    fn cover_array_fixtures() {
        let (_, _, c, _) = setup(b"abaababa");
        assert_eq!(c.cover_array(), &[1, 2, 3, 4, 5, 3, 7, 3]);
        assert_eq!(c.range_array(), &[1, 2, 8, 4, 5, 0, 7, 0]);
        assert_eq!(c.cov_prefix(8), 3); // cov("abaababa") = "aba"
    }

    #[test]
    fn simulation_fixtures() {
        let (t, b, c, p) = setup(b"abaababa");
        let mut rs = RangeScratch::new();
        let mut stats = QueryStats::default();

        let ext = BorderExtension::build(&t, &b, 8, *b"ab");
        let mut sim = CoverSimulation::begin(&c, &p, &ext, &mut rs, &mut stats).unwrap();
        // brute-force cover array of "abaababaab": positions 9..10 are [9, 5]
        assert_eq!(sim.cov(9).unwrap(), 9);
        assert_eq!(sim.cov(10).unwrap(), 5);
        assert_eq!(sim.cov(5).unwrap(), 5);
        assert_eq!(sim.cov(1).unwrap(), 1);
        assert_eq!(sim.range(3, &mut stats).unwrap(), 8);
        assert_eq!(sim.range(5, &mut stats).unwrap(), 10);
        sim.release();
        sim.release(); // idempotent
        drop(sim);
        assert!(rs.is_clean());

        let ext = BorderExtension::build(&t, &b, 3, *b"a");
        let sim = CoverSimulation::begin(&c, &p, &ext, &mut rs, &mut stats).unwrap();
        assert_eq!(sim.cov(4).unwrap(), 4); // cov("abaa") = "abaa"
        drop(sim);

        let ext = BorderExtension::build(&t, &b, 3, *b"b");
        let sim = CoverSimulation::begin(&c, &p, &ext, &mut rs, &mut stats).unwrap();
        assert_eq!(sim.range(2, &mut stats).unwrap(), 4); // range("abab", 2) = 4
        drop(sim);

        let (t, b, c, p) = setup(b"a");
        let ext = BorderExtension::build(&t, &b, 1, *b"a");
        let sim = CoverSimulation::begin(&c, &p, &ext, &mut rs, &mut stats).unwrap();
        assert_eq!(sim.cov(2).unwrap(), 1); // cov("aa") = "a"
        drop(sim);
        assert!(rs.is_clean());
    }

    #[test]
    fn not_superprimitive_is_rejected() {
        let (t, b, c, p) = setup(b"abaababa");
        let mut rs = RangeScratch::new();
        let mut stats = QueryStats::default();
        let ext = BorderExtension::build(&t, &b, 8, *b"ab");
        let sim = CoverSimulation::begin(&c, &p, &ext, &mut rs, &mut stats).unwrap();
        assert_eq!(
            sim.range(6, &mut stats).unwrap_err(),
            Error::NotSuperprimitive { k: 6 }
        );
    }

    #[test]
    fn arrays_match_definitional_exhaustive() {
        for n in 1..=14usize {
            for bits in 0..(1u32 << n) {
                let s: Vec<u8> =
                    (0..n).map(|k| if bits >> k & 1 == 1 { b'b' } else { b'a' }).collect();
                let (_, b, c, _) = setup(&s);
                let dc = oracle::definitional_cover_array(&s);
                let dr = oracle::definitional_range_array(&s);
                assert_eq!(c.cover_array(), &dc[1..], "C mismatch on {s:?}");
                assert_eq!(c.range_array(), &dr[1..], "R mismatch on {s:?}");
                let _ = b;
            }
        }
    }

    #[test]
    #[allow(clippy::needless_range_loop)] // k is a 1-based prefix length
    fn simulation_matches_from_scratch_small() {
        // all (l_len, w) splits over small binary strings
        for n in 1..=8usize {
            for bits in 0..(1u32 << n) {
                let s: Vec<u8> =
                    (0..n).map(|k| if bits >> k & 1 == 1 { b'b' } else { b'a' }).collect();
                let (t, b, c, p) = setup(&s);
                let mut rs = RangeScratch::new();
                for l_len in 0..=n {
                    for wlen in 0..=3usize {
                        for wbits in 0..(1u32 << wlen) {
                            let w: Vec<u8> = (0..wlen)
                                .map(|k| if wbits >> k & 1 == 1 { b'b' } else { b'a' })
                                .collect();
                            let mut lw = s[..l_len].to_vec();
                            lw.extend_from_slice(&w);
                            if lw.is_empty() {
                                continue;
                            }
                            let (dc, _) = oracle::naive_cover_range_arrays(&lw);
                            let mut stats = QueryStats::default();
                            let ext = BorderExtension::build(&t, &b, l_len, w.clone());
                            let sim =
                                CoverSimulation::begin(&c, &p, &ext, &mut rs, &mut stats).unwrap();
                            for k in 1..=lw.len() {
                                assert_eq!(
                                    sim.cov(k).unwrap(),
                                    dc[k],
                                    "cov k={k} s={s:?} l={l_len} w={w:?}"
                                );
                                if dc[k] == k {
                                    assert_eq!(
                                        sim.range(k, &mut stats).unwrap(),
                                        oracle::definitional_range(&lw, k),
                                        "range k={k} s={s:?} l={l_len} w={w:?}"
                                    );
                                }
                            }
                            drop(sim);
                            assert!(rs.is_clean());
                        }
                    }
                }
            }
        }
    }
}
