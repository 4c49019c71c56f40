//! Independent reference implementations: linear-time border/cover baselines
//! for the from-scratch query path and verification, plus definitional
//! (polynomial-time) routines used as oracles in tests.
//!
//! Nothing here shares code with the index modules.

use crate::edit::EditOp;
use crate::error::{Error, Result};
use crate::text::Text;

/// Longest proper prefix-suffix length of `s`, via the classical border-array
/// recurrence. O(|s|).
pub fn naive_border(s: &[u8]) -> usize {
    *naive_border_array(s).last().unwrap()
}

/// Border array of `s`, 1-based with a leading `[0]` slot: `out[i] = |bord(s[1..i])|`.
pub fn naive_border_array(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    assert!(n > 0, "oracle input must be non-empty");
    let mut b = vec![0usize; n + 1];
    for i in 2..=n {
        let mut x = b[i - 1];
        while x > 0 && s[x] != s[i - 1] {
            x = b[x];
        }
        b[i] = if s[x] == s[i - 1] { x + 1 } else { 0 };
    }
    b
}

/// Length of the shortest cover of `s`, via a fresh run of the online
/// cover-array algorithm. O(|s|).
pub fn naive_cover(s: &[u8]) -> usize {
    naive_cover_range_arrays(s).0[s.len()]
}

/// Cover array `C` and range array `R` of `s`, 1-based with leading `[0]`
/// slots, computed by the online algorithm driven by the border array.
pub fn naive_cover_range_arrays(s: &[u8]) -> (Vec<usize>, Vec<usize>) {
    let n = s.len();
    let b = naive_border_array(s);
    let mut c = vec![0usize; n + 1];
    let mut r = vec![0usize; n + 1];
    for idx in 1..=n {
        let clen = c[b[idx]];
        if clen > 0 && r[clen] >= idx - clen {
            c[idx] = clen;
            r[clen] = idx;
        } else {
            c[idx] = idx;
            r[idx] = idx;
        }
    }
    (c, r)
}

/// Smallest prefix length whose occurrence intervals union to `[1..|s|]`,
/// straight from the definition. O(|s|^2). Oracle for `naive_cover` itself.
#[allow(clippy::needless_range_loop)] // 1-based positional scans
pub fn definitional_cover(s: &[u8]) -> usize {
    let n = s.len();
    assert!(n > 0);
    let z = definitional_z(s);
    'cand: for k in 1..=n {
        let mut covered_to = 0usize; // rightmost covered position so far
        for i in 1..=n - k + 1 {
            if z[i] >= k {
                if i > covered_to + 1 {
                    continue 'cand; // gap at covered_to + 1
                }
                covered_to = i + k - 1;
            }
        }
        if covered_to == n {
            return k;
        }
    }
    n
}

/// Largest `r` such that `s[1..k]` covers `s[1..r]`, by interval union of
/// occurrences found by direct comparison.
pub fn definitional_range(s: &[u8], k: usize) -> usize {
    let n = s.len();
    assert!(k >= 1 && k <= n);
    let mut covered_to = 0usize;
    for i in 1..=n - k + 1 {
        if s[i - 1..i + k - 1] == s[..k] {
            if i > covered_to + 1 {
                break;
            }
            covered_to = i + k - 1;
        }
    }
    covered_to
}

/// Definitional cover array: `out[i] = definitional_cover(s[1..i])`.
pub fn definitional_cover_array(s: &[u8]) -> Vec<usize> {
    let mut out = vec![0usize; s.len() + 1];
    for i in 1..=s.len() {
        out[i] = definitional_cover(&s[..i]);
    }
    out
}

/// Definitional range array: `out[k] = range(s, k)` when `s[1..k]` is
/// superprimitive, else 0.
pub fn definitional_range_array(s: &[u8]) -> Vec<usize> {
    let mut out = vec![0usize; s.len() + 1];
    for k in 1..=s.len() {
        if definitional_cover(&s[..k]) == k {
            out[k] = definitional_range(s, k);
        }
    }
    out
}

/// Definitional border array: for each prefix, the longest shorter length that
/// is simultaneously a prefix and a suffix, by direct comparison.
pub fn definitional_border_array(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut out = vec![0usize; n + 1];
    for i in 1..=n {
        for b in (0..i).rev() {
            if s[..b] == s[i - b..i] {
                out[i] = b;
                break;
            }
        }
    }
    out
}

/// Definitional border-group array: for each prefix, the shortest border whose
/// smallest period equals the prefix's smallest period, or the prefix length.
pub fn definitional_group_array(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let b = definitional_border_array(s);
    let mut out = vec![0usize; n + 1];
    for i in 1..=n {
        let per = i - b[i];
        out[i] = i;
        // borders of s[..i], shortest first
        let mut chain = Vec::new();
        let mut x = b[i];
        while x > 0 {
            chain.push(x);
            x = b[x];
        }
        for &cand in chain.iter().rev() {
            if cand - b[cand] == per {
                out[i] = cand;
                break;
            }
        }
    }
    out
}

fn definitional_z(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0usize; n + 1];
    for i in 1..=n {
        z[i] = s.iter().zip(&s[i - 1..]).take_while(|(a, b)| a == b).count();
    }
    z
}

/// The edited string `T' = T[1..i-1] w T[j+1..n]`, materialized.
pub fn materialize(t: &Text, op: &EditOp) -> Result<Vec<u8>> {
    op.validate(t.len())?;
    let n = t.len();
    let mut out = Vec::with_capacity(op.i - 1 + op.w.len() + n - op.j);
    out.extend_from_slice(t.factor(1, op.i - 1));
    out.extend_from_slice(&op.w);
    out.extend_from_slice(t.factor(op.j + 1, n));
    if out.is_empty() {
        return Err(Error::EmptyResult);
    }
    Ok(out)
}
