//! Shortest cover after an edit.
//!
//! Runs on top of the LBAE result `b* = |bord(T')|`. When `T'` is
//! non-periodic the only candidate below `|T'|` is `c = cov(bord(T'))`, and
//! `c` covers `T'` iff its prefix reach inside `Lw`, its suffix reach inside
//! `wR`, and its straddling occurrences jointly tile `[1..|T'|]`. When `T'`
//! is periodic with period `p`, `cov(T') = cov(uvu)` for the prefix
//! `uvu = T'[1 .. p + (|T'| mod p)]`, which either lies inside `Lw` or forces
//! exponent exactly 2 and resolves through one range test.

use crate::border::BorderExtension;
use crate::cover::{CoverSimulation, RangeScratch};
use crate::engine::StructureSet;
use crate::error::Result;
use crate::lbae::{edited_lce, EditedView, Strategy};
use crate::stats::QueryStats;

#[allow(clippy::too_many_arguments)]
pub(crate) fn scae_on_view(
    main: &StructureSet,
    anti: &StructureSet,
    view: &EditedView,
    ext: &BorderExtension<'_>,
    rstar_main: &mut RangeScratch,
    rstar_anti: &mut RangeScratch,
    b_star: usize,
    stats: &mut QueryStats,
) -> Result<usize> {
    let np = view.n_prime;
    if b_star == 0 {
        // empty border: T' has no cover shorter than itself
        return Ok(np);
    }
    let sim = CoverSimulation::begin(&main.covers, &main.pocc, ext, rstar_main, stats)?;
    if 2 * b_star >= np {
        scae_periodic(main, view, &sim, b_star, stats)
    } else {
        scae_non_periodic(main, anti, view, ext, &sim, rstar_anti, b_star, stats)
    }
}

/// Periodic case: `per(T') = n' - b* <= n'/2`.
fn scae_periodic(
    main: &StructureSet,
    view: &EditedView,
    sim: &CoverSimulation<'_>,
    b_star: usize,
    stats: &mut QueryStats,
) -> Result<usize> {
    let np = view.n_prime;
    let per = np - b_star;
    let exponent = np / per; // >= 2
    let u_res = np - exponent * per;
    let uvu_len = per + u_res;
    if uvu_len <= view.lw_len() {
        // uvu is a prefix of Lw and a cover of T'
        return sim.cov(uvu_len);
    }
    // |uvu| > |Lw| >= n'/2 forces exponent exactly 2: T' = uvuvu
    debug_assert_eq!(exponent, 2);
    debug_assert_eq!(uvu_len, np - per);
    // bord(uvu) <= |uv|, and borders of uvu up to that length are exactly
    // borders of the text (uv is a prefix of L, vu a suffix of R)
    let bord_uvu = main.borders.longest_border_at_most(per);
    if bord_uvu == 0 {
        return Ok(uvu_len);
    }
    let x_len = sim.cov(bord_uvu)?;
    let u_len = np - 2 * per;
    if sim.range(x_len, stats)? >= uvu_len - u_len.max(x_len) {
        Ok(x_len)
    } else {
        Ok(uvu_len)
    }
}

/// Non-periodic case: `b* < n'/2`, candidate `c = cov(bord(T'))`.
#[allow(clippy::too_many_arguments)]
fn scae_non_periodic(
    main: &StructureSet,
    anti: &StructureSet,
    view: &EditedView,
    ext: &BorderExtension<'_>,
    sim: &CoverSimulation<'_>,
    rstar_anti: &mut RangeScratch,
    b_star: usize,
    stats: &mut QueryStats,
) -> Result<usize> {
    let np = view.n_prime;
    let c = sim.cov(b_star)?;
    // longest prefix of Lw covered by c
    let s = sim.range(c, stats)?;
    // longest suffix of wR covered by c, via the reversed structures
    let t = if c <= view.w.len() + view.r_len {
        let w_rev: Vec<u8> = view.w.iter().rev().copied().collect();
        let anti_ext = BorderExtension::build(&anti.text, &anti.borders, view.r_len, w_rev);
        stats.chain_jumps += anti_ext.total_chain_jumps;
        stats.max_chain_per_char = stats.max_chain_per_char.max(anti_ext.max_chain_per_char);
        let anti_sim =
            CoverSimulation::begin(&anti.covers, &anti.pocc, &anti_ext, rstar_anti, stats)?;
        anti_sim.range(c, stats)?
    } else {
        c // the suffix occurrence of c covers the last |c| positions
    };
    if s + t >= np {
        return Ok(c);
    }

    // The middle is only reachable by occurrences of c starting in L and
    // ending in R. Each such occurrence is z . (prefix of R) for a border z
    // of Lw with |w| < z < |c| — possible only in the long strategy.
    let mut cover_end = s;
    if matches!(view.strategy, Strategy::Long { .. }) {
        let mut cands: Vec<usize> = Vec::new();
        for grp in ext.border_groups(view.lw_len())? {
            if grp.count <= 2 {
                cands.push(grp.longest);
                if grp.count == 2 {
                    cands.push(grp.shortest);
                }
            } else {
                let e = grp.period + edited_lce(main, view, 1, grp.period + 1, stats)?;
                let r = edited_lce(
                    main,
                    view,
                    np - view.r_len - grp.period + 1,
                    np - view.r_len + 1,
                    stats,
                )?;
                if e < c {
                    // c is non-periodic, so the group's only viable member
                    // has length exactly E_k - r_k
                    let z = e.saturating_sub(r);
                    if grp.contains(z) {
                        cands.push(z);
                    }
                } else if let Some(z) = grp.largest_at_most(c - 1) {
                    // all members below |c| exceed |c|/2 here, so at most one exists
                    cands.push(z);
                }
            }
        }
        cands.retain(|&z| z > view.w.len() && z < c);
        cands.sort_unstable();
        cands.dedup();

        let lw = view.lw_len();
        let mut intervals: Vec<(usize, usize)> = Vec::new();
        for &z in &cands {
            if edited_lce(main, view, z + 1, lw + 1, stats)? >= c - z {
                intervals.push((lw - z + 1, lw - z + c));
                stats.straddlers_verified += 1;
            }
        }
        intervals.sort_unstable();
        for (a0, b0) in intervals {
            if a0 <= cover_end + 1 {
                cover_end = cover_end.max(b0);
            }
        }
    }
    if cover_end + t >= np {
        Ok(c)
    } else {
        Ok(np)
    }
}
