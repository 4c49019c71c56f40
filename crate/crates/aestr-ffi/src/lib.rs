//! C ABI over the after-edit string index: opaque handles, status codes, and
//! plain-integer answers so other languages can bind without knowing any Rust
//! types. The generated header lives in `include/aestr.h`.
//!
//! Conventions:
//! - every function returns an [`AestrStatus`]; outputs go through pointers;
//! - `AestrIndex` is immutable and may be shared across threads;
//! - `AestrScratch` is per-thread mutable query state;
//! - positions are 1-based and `j = i - 1` encodes an insertion, exactly as
//!   in the library API.

use std::panic::{catch_unwind, AssertUnwindSafe};

use aestr::{AfterEditIndex, EditOp, Error, QueryScratch};

/// Status codes returned by every FFI entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AestrStatus {
    Ok = 0,
    /// The input text was empty.
    EmptyText = 1,
    /// A position was outside its valid range.
    OutOfRange = 2,
    /// The edit would produce an empty string.
    EmptyResult = 3,
    /// A required pointer argument was null.
    NullArgument = 4,
    /// An internal invariant failed; the call did not complete.
    Panic = 5,
}

/// Opaque preprocessed index over one text.
pub struct AestrIndex {
    inner: AfterEditIndex,
}

/// Opaque per-thread query scratch.
pub struct AestrScratch {
    inner: QueryScratch,
}

fn status_of(err: &Error) -> AestrStatus {
    match err {
        Error::EmptyText => AestrStatus::EmptyText,
        Error::OutOfRange { .. } => AestrStatus::OutOfRange,
        Error::EmptyResult => AestrStatus::EmptyResult,
        // defensive contract violations; not reachable through this ABI
        Error::NotSuperprimitive { .. } | Error::UnsupportedComparison => AestrStatus::Panic,
    }
}

fn guarded(f: impl FnOnce() -> AestrStatus) -> AestrStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(AestrStatus::Panic)
}

/// Builds an index over `data[0..len]`. On success writes a handle to `out`.
/// The handle must be released with `aestr_index_free`.
///
/// # Safety
/// `data` must point to `len` readable bytes and `out` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn aestr_index_new(
    data: *const u8,
    len: usize,
    out: *mut *mut AestrIndex,
) -> AestrStatus {
    if out.is_null() || (data.is_null() && len > 0) {
        return AestrStatus::NullArgument;
    }
    guarded(|| {
        let bytes = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(data, len)
        };
        match AfterEditIndex::new(bytes.to_vec()) {
            Ok(inner) => {
                out.write(Box::into_raw(Box::new(AestrIndex { inner })));
                AestrStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Releases an index handle. Null is a no-op.
///
/// # Safety
/// `index` must be a handle from `aestr_index_new` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn aestr_index_free(index: *mut AestrIndex) {
    if !index.is_null() {
        drop(Box::from_raw(index));
    }
}

/// Length of the indexed text.
///
/// # Safety
/// `index` must be a live handle from `aestr_index_new`.
#[no_mangle]
pub unsafe extern "C" fn aestr_index_len(index: *const AestrIndex) -> usize {
    if index.is_null() {
        return 0;
    }
    (*index).inner.len()
}

/// Allocates query scratch sized for `index`. One scratch serves any number
/// of sequential queries; concurrent queries need one scratch per thread.
///
/// # Safety
/// `index` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn aestr_scratch_new(
    index: *const AestrIndex,
    out: *mut *mut AestrScratch,
) -> AestrStatus {
    if index.is_null() || out.is_null() {
        return AestrStatus::NullArgument;
    }
    guarded(|| {
        let scratch = (*index).inner.new_scratch();
        out.write(Box::into_raw(Box::new(AestrScratch { inner: scratch })));
        AestrStatus::Ok
    })
}

/// Releases a scratch handle. Null is a no-op.
///
/// # Safety
/// `scratch` must be a handle from `aestr_scratch_new` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn aestr_scratch_free(scratch: *mut AestrScratch) {
    if !scratch.is_null() {
        drop(Box::from_raw(scratch));
    }
}

unsafe fn edit_op(i: usize, j: usize, w: *const u8, w_len: usize) -> Option<EditOp> {
    if w.is_null() && w_len > 0 {
        return None;
    }
    let w = if w_len == 0 {
        Vec::new()
    } else {
        std::slice::from_raw_parts(w, w_len).to_vec()
    };
    Some(EditOp::substitute(i, j, w))
}

/// Longest border of `T' = T[1..i-1] w T[j+1..n]`, written to `out`.
///
/// # Safety
/// `index` and `scratch` must be live handles, `w` must point to `w_len`
/// readable bytes (or be null with `w_len = 0`), and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn aestr_lbae(
    index: *const AestrIndex,
    scratch: *mut AestrScratch,
    i: usize,
    j: usize,
    w: *const u8,
    w_len: usize,
    out: *mut usize,
) -> AestrStatus {
    if index.is_null() || scratch.is_null() || out.is_null() {
        return AestrStatus::NullArgument;
    }
    guarded(|| {
        let Some(op) = edit_op(i, j, w, w_len) else {
            return AestrStatus::NullArgument;
        };
        match (*index).inner.lbae(&op, &mut (*scratch).inner) {
            Ok(len) => {
                out.write(len);
                AestrStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Shortest cover of `T'`, written to `out`.
///
/// # Safety
/// As for `aestr_lbae`.
#[no_mangle]
pub unsafe extern "C" fn aestr_scae(
    index: *const AestrIndex,
    scratch: *mut AestrScratch,
    i: usize,
    j: usize,
    w: *const u8,
    w_len: usize,
    out: *mut usize,
) -> AestrStatus {
    if index.is_null() || scratch.is_null() || out.is_null() {
        return AestrStatus::NullArgument;
    }
    guarded(|| {
        let Some(op) = edit_op(i, j, w, w_len) else {
            return AestrStatus::NullArgument;
        };
        match (*index).inner.scae(&op, &mut (*scratch).inner) {
            Ok(len) => {
                out.write(len);
                AestrStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Both answers in one pass. Either output pointer may be null to skip it.
///
/// # Safety
/// As for `aestr_lbae`; `out_border`/`out_cover` may each be null.
#[no_mangle]
pub unsafe extern "C" fn aestr_query(
    index: *const AestrIndex,
    scratch: *mut AestrScratch,
    i: usize,
    j: usize,
    w: *const u8,
    w_len: usize,
    out_border: *mut usize,
    out_cover: *mut usize,
) -> AestrStatus {
    if index.is_null() || scratch.is_null() {
        return AestrStatus::NullArgument;
    }
    guarded(|| {
        let Some(op) = edit_op(i, j, w, w_len) else {
            return AestrStatus::NullArgument;
        };
        match (*index).inner.query(&op, &mut (*scratch).inner) {
            Ok(ans) => {
                if !out_border.is_null() {
                    out_border.write(ans.border_len);
                }
                if !out_cover.is_null() {
                    out_cover.write(ans.cover_len);
                }
                AestrStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}
