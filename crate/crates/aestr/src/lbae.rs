//! Longest border after an edit.
//!
//! A normalized query sees the edited string as `T' = L w R` over the
//! oriented text (reversed when `|L| < |R|`), with `|L| >= |R|` and
//! `2|w| <= |L|`. Step 1 finds the longest border of `T'` longer than `R`
//! (always of the form `bR` for a non-empty border `b` of `Lw`); step 2 falls
//! back to the longest border of the text itself of length at most `|R|`.

use crate::border::BorderExtension;
use crate::engine::StructureSet;
use crate::error::{Error, Result};
use crate::stats::QueryStats;
use crate::text::PrefixTable;

/// How LCE queries on the edited string are realized.
#[derive(Debug)]
pub(crate) enum Strategy {
    /// `|bord(Lw)| <= |w|`: at most `|w|` borders to test; comparisons that
    /// run past `L` finish through the prefix table of `W = w . tail(R)`.
    Short {
        zw: Option<PrefixTable>,
        tail_len: usize,
    },
    /// `|bord(Lw)| > |w|`: `w` occurs inside `L` at `w_occ`, so any LCE on
    /// `T'` decomposes into a constant number of LCE queries on the text.
    Long { w_occ: usize },
}

#[derive(Debug)]
pub(crate) struct EditedView {
    pub mirrored: bool,
    pub l_len: usize,
    /// oriented `w` (already reversed when `mirrored`)
    pub w: Vec<u8>,
    /// 1-based start of `R` in the oriented text; only meaningful when `r_len > 0`
    pub r_start: usize,
    pub r_len: usize,
    pub n_prime: usize,
    /// `|bord(Lw)|`
    pub b_lw: usize,
    pub strategy: Strategy,
}

impl EditedView {
    pub fn lw_len(&self) -> usize {
        self.l_len + self.w.len()
    }
}

/// `lcp(T'[a..], T'[b..])`; positions may be `n'+1` (empty suffix).
///
/// In the long strategy this is exact for every position pair. In the short
/// strategy only the pairs the short case needs are expressible; anything
/// else reports `UnsupportedComparison`.
pub(crate) fn edited_lce(
    set: &StructureSet,
    view: &EditedView,
    a: usize,
    b: usize,
    stats: &mut QueryStats,
) -> Result<usize> {
    let np = view.n_prime;
    debug_assert!(a >= 1 && b >= 1 && a <= np + 1 && b <= np + 1);
    if a == b {
        return Ok(np + 1 - a);
    }
    if a > np || b > np {
        return Ok(0);
    }
    match &view.strategy {
        Strategy::Long { w_occ } => Ok(lce_long(set, view, *w_occ, a, b, stats)),
        Strategy::Short { zw, tail_len } => {
            lce_short(set, view, zw.as_ref(), *tail_len, a, b, stats)
        }
    }
}

/// Position `q` of `T'` mapped into the oriented text, with the number of
/// positions left in its segment.
#[inline]
fn map_pos(view: &EditedView, w_occ: usize, q: usize) -> (usize, usize) {
    let l = view.l_len;
    let wl = view.w.len();
    if q <= l {
        (q, l - q + 1)
    } else if q <= l + wl {
        (w_occ + (q - l) - 1, l + wl - q + 1)
    } else {
        (view.r_start + (q - l - wl) - 1, view.n_prime - q + 1)
    }
}

fn lce_long(
    set: &StructureSet,
    view: &EditedView,
    w_occ: usize,
    mut a: usize,
    mut b: usize,
    stats: &mut QueryStats,
) -> usize {
    let np = view.n_prime;
    let mut total = 0usize;
    while a <= np && b <= np {
        let (pa, la) = map_pos(view, w_occ, a);
        let (pb, lb) = map_pos(view, w_occ, b);
        let cap = la.min(lb);
        stats.lce_calls += 1;
        let m = set.lce.lce(pa, pb).min(cap);
        total += m;
        if m < cap {
            break;
        }
        a += m;
        b += m;
    }
    total
}

fn lce_short(
    set: &StructureSet,
    view: &EditedView,
    zw: Option<&PrefixTable>,
    tail_len: usize,
    a: usize,
    b: usize,
    stats: &mut QueryStats,
) -> Result<usize> {
    // only `lcp(T'[x..], R)` with x inside L is expressible
    let lw = view.lw_len();
    let x = if b == lw + 1 {
        a
    } else if a == lw + 1 {
        b
    } else {
        return Err(Error::UnsupportedComparison);
    };
    if x > view.l_len {
        return Err(Error::UnsupportedComparison);
    }
    let r_len = view.r_len;
    debug_assert!(r_len >= 1);
    let cap = (view.l_len - x + 1).min(r_len);
    stats.lce_calls += 1;
    let m = set.lce.lce(x, view.r_start).min(cap);
    if m < cap {
        return Ok(m);
    }
    if cap == r_len {
        return Ok(r_len);
    }
    // the comparison left L: match w against the length-m2 suffix of R
    let m2 = r_len - cap;
    let zw = zw.ok_or(Error::UnsupportedComparison)?;
    if m2 > tail_len {
        return Err(Error::UnsupportedComparison);
    }
    let pos = view.w.len() + (tail_len - m2) + 1;
    Ok(cap + zw.at(pos))
}

fn extends_to_border(
    set: &StructureSet,
    view: &EditedView,
    z: usize,
    stats: &mut QueryStats,
) -> Result<bool> {
    Ok(edited_lce(set, view, z + 1, view.lw_len() + 1, stats)? == view.r_len)
}

/// Short border case: walk the (at most `|w|`-long) border chain of `Lw` in
/// descending order; the first border whose extension matches all of `R` wins.
pub(crate) fn lbae_short_case(
    set: &StructureSet,
    view: &EditedView,
    stats: &mut QueryStats,
) -> Result<Option<usize>> {
    let mut x = view.b_lw;
    while x > 0 {
        if extends_to_border(set, view, x, stats)? {
            return Ok(Some(x + view.r_len));
        }
        // x <= |w| <= |L|, so the chain stays inside the base border array
        x = set.borders.border(x);
    }
    Ok(None)
}

/// Long border case: scan the O(log n) border groups of `Lw`. Small groups
/// are tested member by member; in larger groups every periodic member that
/// can extend across `R` has length exactly `E_k - r_k`, where `E_k` is the
/// length of the longest prefix of `T'` with the group period and `r_k` is
/// how far that period survives into `R`.
pub(crate) fn lbae_long_case(
    set: &StructureSet,
    view: &EditedView,
    ext: &BorderExtension<'_>,
    stats: &mut QueryStats,
) -> Result<Option<usize>> {
    let np = view.n_prime;
    let r_len = view.r_len;
    let mut best: Option<usize> = None;
    let mut consider = |z: usize, set: &StructureSet, stats: &mut QueryStats| -> Result<()> {
        if extends_to_border(set, view, z, stats)? {
            best = best.max(Some(z + r_len));
        }
        Ok(())
    };
    for grp in ext.border_groups(view.lw_len())? {
        if grp.count <= 2 {
            consider(grp.longest, set, stats)?;
            if grp.count == 2 {
                consider(grp.shortest, set, stats)?;
            }
        } else {
            let e = grp.period + edited_lce(set, view, 1, grp.period + 1, stats)?;
            let r = edited_lce(set, view, np - r_len - grp.period + 1, np - r_len + 1, stats)?;
            if let Some(z) = grp.largest_at_most(e.saturating_sub(r)) {
                consider(z, set, stats)?;
            }
            // the shortest member may be non-periodic and is exempt from the bound
            consider(grp.shortest, set, stats)?;
        }
    }
    Ok(best)
}

/// Full LBAE evaluation on a normalized view.
pub(crate) fn lbae_on_view(
    set: &StructureSet,
    view: &EditedView,
    ext: &BorderExtension<'_>,
    stats: &mut QueryStats,
) -> Result<usize> {
    if view.r_len == 0 {
        // T' = Lw; its border array is already extended
        return Ok(view.b_lw);
    }
    let step1 = match view.strategy {
        Strategy::Short { .. } => lbae_short_case(set, view, stats)?,
        Strategy::Long { .. } => lbae_long_case(set, view, ext, stats)?,
    };
    // any border of length <= |R| <= |L| is simultaneously a prefix and a
    // suffix of the oriented text
    let step2 = set.borders.longest_border_at_most(view.r_len);
    Ok(step1.unwrap_or(0).max(step2))
}
