//! The after-edit index: preprocessed structures over the text and its
//! reversal, plus the per-query evaluation drivers.

use crate::border::{BorderArrays, BorderExtension};
use crate::cover::{CoverArrays, RangeScratch};
use crate::edit::EditOp;
use crate::error::{Error, Result};
use crate::lbae::{self, EditedView, Strategy};
use crate::lce::LceIndex;
use crate::oracle;
use crate::prefix_occ::PrefixOccIndex;
use crate::scae;
use crate::stats::{QueryPath, QueryStats};
use crate::text::{PrefixTable, Text};

/// Everything preprocessed for one direction of the text.
#[derive(Debug)]
pub struct StructureSet {
    pub text: Text,
    pub lce: LceIndex,
    pub pocc: PrefixOccIndex,
    pub borders: BorderArrays,
    pub covers: CoverArrays,
}

impl StructureSet {
    pub fn build(text: Text) -> Self {
        let lce = LceIndex::build(&text);
        let pocc = PrefixOccIndex::build(&text);
        let borders = BorderArrays::build(&text);
        let covers = CoverArrays::build(&borders);
        StructureSet {
            text,
            lce,
            pocc,
            borders,
            covers,
        }
    }
}

/// Immutable after-edit index over a text; answers longest-border and
/// shortest-cover queries for singly-edited variants of it.
///
/// The index is safe to share across threads. Each concurrent query stream
/// needs its own [`QueryScratch`].
#[derive(Debug)]
pub struct AfterEditIndex {
    fwd: StructureSet,
    rev: StructureSet,
}

/// Mutable per-query state: the shared range scratch for each direction
/// (kept all-zero between queries) and the probe counters of the last query.
#[derive(Debug)]
pub struct QueryScratch {
    rstar_fwd: RangeScratch,
    rstar_rev: RangeScratch,
    pub stats: QueryStats,
}

impl QueryScratch {
    /// Full sweep over both scratch arrays; true when every slot is zero.
    pub fn rstar_is_clean(&self) -> bool {
        self.rstar_fwd.is_clean() && self.rstar_rev.is_clean()
    }

    /// (total slots released, largest single release) over the scratch lifetime.
    pub fn release_instrumentation(&self) -> (u64, usize) {
        (
            self.rstar_fwd.total_releases + self.rstar_rev.total_releases,
            self.rstar_fwd.max_release.max(self.rstar_rev.max_release),
        )
    }
}

/// Answers for one edit query; both answers are lengths of prefixes of `T'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QueryAnswer {
    pub border_len: usize,
    pub cover_len: usize,
    pub n_prime: usize,
}

enum Prepared<'a> {
    /// `|w| > |L|/2` after orientation (so `|T'| in O(|w|)`), or `|T'| <= 2`:
    /// answer on the materialized string.
    FromScratch(Vec<u8>),
    Indexed {
        main: &'a StructureSet,
        anti: &'a StructureSet,
        view: EditedView,
        ext: BorderExtension<'a>,
    },
}

impl AfterEditIndex {
    pub fn new(data: impl Into<Vec<u8>>) -> Result<Self> {
        let text = Text::new(data)?;
        let rev = StructureSet::build(text.reversed());
        let fwd = StructureSet::build(text);
        Ok(AfterEditIndex { fwd, rev })
    }

    pub fn len(&self) -> usize {
        self.fwd.text.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn text(&self) -> &Text {
        &self.fwd.text
    }

    pub fn forward(&self) -> &StructureSet {
        &self.fwd
    }

    pub fn reversed(&self) -> &StructureSet {
        &self.rev
    }

    pub fn new_scratch(&self) -> QueryScratch {
        QueryScratch {
            rstar_fwd: RangeScratch::with_capacity(self.len() + 64),
            rstar_rev: RangeScratch::with_capacity(self.len() + 64),
            stats: QueryStats::default(),
        }
    }

    /// Length of the longest border of `T' = T[1..i-1] w T[j+1..n]`.
    pub fn lbae(&self, op: &EditOp, scratch: &mut QueryScratch) -> Result<usize> {
        scratch.stats.reset();
        match self.prepare(op, &mut scratch.stats)? {
            Prepared::FromScratch(tp) => Ok(oracle::naive_border(&tp)),
            Prepared::Indexed {
                main, view, ext, ..
            } => lbae::lbae_on_view(main, &view, &ext, &mut scratch.stats),
        }
    }

    /// Length of the shortest cover of `T'`.
    pub fn scae(&self, op: &EditOp, scratch: &mut QueryScratch) -> Result<usize> {
        Ok(self.query(op, scratch)?.cover_len)
    }

    /// Both answers in one pass (the cover computation runs LBAE anyway).
    pub fn query(&self, op: &EditOp, scratch: &mut QueryScratch) -> Result<QueryAnswer> {
        let QueryScratch {
            rstar_fwd,
            rstar_rev,
            stats,
        } = scratch;
        stats.reset();
        match self.prepare(op, stats)? {
            Prepared::FromScratch(tp) => Ok(QueryAnswer {
                border_len: oracle::naive_border(&tp),
                cover_len: oracle::naive_cover(&tp),
                n_prime: tp.len(),
            }),
            Prepared::Indexed {
                main,
                anti,
                view,
                ext,
            } => {
                let b_star = lbae::lbae_on_view(main, &view, &ext, stats)?;
                let (rstar_main, rstar_anti) = if view.mirrored {
                    (rstar_rev, rstar_fwd)
                } else {
                    (rstar_fwd, rstar_rev)
                };
                let cover_len = scae::scae_on_view(
                    main, anti, &view, &ext, rstar_main, rstar_anti, b_star, stats,
                )?;
                Ok(QueryAnswer {
                    border_len: b_star,
                    cover_len,
                    n_prime: view.n_prime,
                })
            }
        }
    }

    /// Validates and orients the query, classifies the strategy, and extends
    /// the border arrays along `w`.
    fn prepare(&self, op: &EditOp, stats: &mut QueryStats) -> Result<Prepared<'_>> {
        let n = self.len();
        op.validate(n)?;
        let n_prime = op.n_prime(n);
        if n_prime == 0 {
            return Err(Error::EmptyResult);
        }

        let l_fwd = op.i - 1;
        let r_fwd = n - op.j;
        let mirrored = l_fwd < r_fwd;
        let (l_len, r_len, j_oriented, w_oriented) = if mirrored {
            // phi(n-j+1, n-i+1, w^R) on the reversed text
            let w_rev: Vec<u8> = op.w.iter().rev().copied().collect();
            (r_fwd, l_fwd, n - op.i + 1, w_rev)
        } else {
            (l_fwd, r_fwd, op.j, op.w.clone())
        };

        if 2 * w_oriented.len() > l_len || n_prime <= 2 {
            stats.path = QueryPath::FromScratch;
            return Ok(Prepared::FromScratch(oracle::materialize(
                &self.fwd.text,
                op,
            )?));
        }

        let (main, anti) = if mirrored {
            (&self.rev, &self.fwd)
        } else {
            (&self.fwd, &self.rev)
        };
        let ext = BorderExtension::build(&main.text, &main.borders, l_len, w_oriented.clone());
        stats.chain_jumps += ext.total_chain_jumps;
        stats.max_chain_per_char = stats.max_chain_per_char.max(ext.max_chain_per_char);

        let w_len = w_oriented.len();
        let lw = l_len + w_len;
        let b_lw = ext.b_at(lw);
        let strategy = if b_lw <= w_len {
            let tail_len = w_len.min(r_len);
            let zw = if w_len + tail_len > 0 {
                let mut wbuf = w_oriented.clone();
                wbuf.extend_from_slice(main.text.factor(n - tail_len + 1, n));
                Some(PrefixTable::build(&wbuf)?)
            } else {
                None
            };
            stats.path = if mirrored {
                QueryPath::ShortMirrored
            } else {
                QueryPath::Short
            };
            Strategy::Short { zw, tail_len }
        } else {
            let w_occ = if b_lw <= l_len {
                // w is the tail of the prefix occurrence of bord(Lw)
                b_lw - w_len + 1
            } else {
                // bord(Lw) reaches past L; shift w left by whole periods
                let p = lw - b_lw;
                let k = w_len.div_ceil(p);
                l_len - k * p + 1
            };
            debug_assert_eq!(
                main.text.factor(w_occ, w_occ + w_len - 1),
                &w_oriented[..],
                "w must occur inside L in the long case"
            );
            stats.path = if mirrored {
                QueryPath::LongMirrored
            } else {
                QueryPath::Long
            };
            Strategy::Long { w_occ }
        };

        let view = EditedView {
            mirrored,
            l_len,
            w: w_oriented,
            r_start: j_oriented + 1,
            r_len,
            n_prime,
            b_lw,
            strategy,
        };
        Ok(Prepared::Indexed {
            main,
            anti,
            view,
            ext,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(s: &[u8]) -> AfterEditIndex {
        AfterEditIndex::new(s.to_vec()).unwrap()
    }

    #[test]
    fn lbae_fixtures() {
        let t = idx(b"abaababa");
        let mut sc = t.new_scratch();
        assert_eq!(t.lbae(&EditOp::insert(9, *b"ab"), &mut sc).unwrap(), 5);
        assert_eq!(t.lbae(&EditOp::substitute(4, 4, *b"b"), &mut sc).unwrap(), 3);
        assert_eq!(t.lbae(&EditOp::delete(4, 4), &mut sc).unwrap(), 5);
    }

    #[test]
    fn scae_fixtures() {
        let t = idx(b"abaababa");
        let mut sc = t.new_scratch();
        assert_eq!(t.scae(&EditOp::insert(9, *b"ab"), &mut sc).unwrap(), 5);
        assert_eq!(t.scae(&EditOp::substitute(4, 4, *b"b"), &mut sc).unwrap(), 8);

        // brute-force cover of "aabaababaab" is the string itself
        let t = idx(b"aabaabab");
        let mut sc = t.new_scratch();
        assert_eq!(t.scae(&EditOp::insert(9, *b"aab"), &mut sc).unwrap(), 11);

        // periodic deep branch: cov("aabaabaab") = "aab"
        let t = idx(b"aabacbaab");
        let mut sc = t.new_scratch();
        let ans = t.query(&EditOp::substitute(5, 5, *b"a"), &mut sc).unwrap();
        assert_eq!(ans.border_len, 6);
        assert_eq!(ans.cover_len, 3);

        // exponent > 3 in the periodic case: cov("aabaabaaba") = "aaba"
        let t = idx(b"aabaabaaba");
        let mut sc = t.new_scratch();
        assert_eq!(t.scae(&EditOp::substitute(6, 6, *b"b"), &mut sc).unwrap(), 4);

        let t = idx(b"aaaa");
        let mut sc = t.new_scratch();
        assert_eq!(t.scae(&EditOp::insert(5, *b"a"), &mut sc).unwrap(), 1);
    }

    #[test]
    fn degenerate_paths() {
        let t = idx(b"ab");
        let mut sc = t.new_scratch();
        // |w| > |L|/2 after orientation: from-scratch
        let a = t.query(&EditOp::substitute(1, 2, *b"zzzz"), &mut sc).unwrap();
        assert_eq!(sc.stats.path, QueryPath::FromScratch);
        assert_eq!((a.border_len, a.cover_len, a.n_prime), (3, 1, 4));

        let t = idx(b"abaababa");
        let mut sc = t.new_scratch();
        // full substitution
        let a = t.query(&EditOp::substitute(1, 8, *b"z"), &mut sc).unwrap();
        assert_eq!((a.border_len, a.cover_len, a.n_prime), (0, 1, 1));
        // empty result
        assert_eq!(
            t.query(&EditOp::delete(1, 8), &mut sc).unwrap_err(),
            Error::EmptyResult
        );
        // invalid positions
        assert!(t.query(&EditOp::substitute(0, 3, *b"x"), &mut sc).is_err());
        assert!(t.query(&EditOp::substitute(3, 9, *b"x"), &mut sc).is_err());

        // front insertion (j = 0) is permitted
        let a = t.query(&EditOp::insert(1, *b"ab"), &mut sc).unwrap();
        assert_eq!(a.n_prime, 10);
        assert_eq!(a.border_len, oracle::naive_border(b"ababaababa"));
        assert_eq!(a.cover_len, oracle::naive_cover(b"ababaababa"));
    }

    #[test]
    fn orientation_fixture() {
        // |L| = 3 < |R| = 4 must mirror
        let t = idx(b"abaababa");
        let mut sc = t.new_scratch();
        let a = t.query(&EditOp::substitute(4, 4, *b"b"), &mut sc).unwrap();
        assert!(matches!(
            sc.stats.path,
            QueryPath::ShortMirrored | QueryPath::LongMirrored
        ));
        assert_eq!((a.border_len, a.cover_len), (3, 8));
    }

    #[test]
    fn edited_lce_matches_naive_on_long_views() {
        fn naive_lcp(s: &[u8], a: usize, b: usize) -> usize {
            s[a - 1..].iter().zip(&s[b - 1..]).take_while(|(x, y)| x == y).count()
        }

        // fixture: T = "abaababa", phi(9, 8, "ab") is a forward long-case view
        let t = idx(b"abaababa");
        let mut stats = QueryStats::default();
        let op = EditOp::insert(9, *b"ab");
        let Prepared::Indexed { main, view, .. } = t.prepare(&op, &mut stats).unwrap() else {
            panic!("expected an indexed view");
        };
        assert!(matches!(view.strategy, Strategy::Long { .. }));
        assert_eq!(crate::lbae::edited_lce(main, &view, 1, 6, &mut stats).unwrap(), 5);
        assert_eq!(crate::lbae::edited_lce(main, &view, 4, 4, &mut stats).unwrap(), 7);
        // lcp("baababaab", "baab") on T' = "abaababaab"
        assert_eq!(crate::lbae::edited_lce(main, &view, 2, 7, &mut stats).unwrap(), 4);
        assert_eq!(crate::lbae::edited_lce(main, &view, 1, 2, &mut stats).unwrap(), 0);

        // shadow check over every position pair of long-case views
        let mut rng_state = 0x2545_F491u64;
        let mut next = move || {
            rng_state ^= rng_state << 13;
            rng_state ^= rng_state >> 7;
            rng_state ^= rng_state << 17;
            rng_state
        };
        let mut long_views = 0usize;
        while long_views < 40 {
            let n = 6 + (next() % 18) as usize;
            let s: Vec<u8> = (0..n).map(|_| b'a' + (next() % 2) as u8).collect();
            let index = AfterEditIndex::new(s.clone()).unwrap();
            let i = 1 + (next() as usize % (n + 1));
            let j = (i - 1) + (next() as usize % (n + 2 - i));
            let wl = (next() % 4) as usize;
            let w: Vec<u8> = (0..wl).map(|_| b'a' + (next() % 2) as u8).collect();
            let op = EditOp::substitute(i, j, w);
            if op.n_prime(n) == 0 {
                continue;
            }
            let mut stats = QueryStats::default();
            let Ok(Prepared::Indexed { main, view, .. }) = index.prepare(&op, &mut stats) else {
                continue;
            };
            if !matches!(view.strategy, Strategy::Long { .. }) {
                continue;
            }
            long_views += 1;
            let mut t_prime = main.text.factor(1, view.l_len).to_vec();
            t_prime.extend_from_slice(&view.w);
            t_prime.extend_from_slice(main.text.factor(view.r_start, main.text.len()));
            assert_eq!(t_prime.len(), view.n_prime);
            for a in 1..=view.n_prime {
                for b in 1..=view.n_prime {
                    assert_eq!(
                        crate::lbae::edited_lce(main, &view, a, b, &mut stats).unwrap(),
                        naive_lcp(&t_prime, a, b),
                        "edited_lce({a},{b}) on T'={t_prime:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn index_is_shareable() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<AfterEditIndex>();
        assert_send_sync::<QueryScratch>();

        let t = idx(b"abaababaabaab");
        std::thread::scope(|scope| {
            for offset in 0..4usize {
                let t = &t;
                scope.spawn(move || {
                    let mut sc = t.new_scratch();
                    for i in 1 + offset..=t.len() {
                        let got = t.query(&EditOp::substitute(i, i, *b"ab"), &mut sc).unwrap();
                        let tp =
                            oracle::materialize(t.text(), &EditOp::substitute(i, i, *b"ab"))
                                .unwrap();
                        assert_eq!(got.border_len, oracle::naive_border(&tp));
                        assert_eq!(got.cover_len, oracle::naive_cover(&tp));
                    }
                });
            }
        });
    }

    #[test]
    fn scratch_stays_clean() {
        let t = idx(b"abaababaabaababaaba");
        let mut sc = t.new_scratch();
        for i in 1..=t.len() {
            let _ = t.query(&EditOp::substitute(i, i, *b"ba"), &mut sc).unwrap();
            assert!(sc.rstar_is_clean());
        }
    }
}
