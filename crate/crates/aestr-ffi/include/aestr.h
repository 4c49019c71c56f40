#ifndef AESTR_H
#define AESTR_H

/* This file is generated by cbindgen from the aestr-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes returned by every FFI entry point.
 */
typedef enum AestrStatus {
  AESTR_STATUS_OK = 0,
  /*
   The input text was empty.
   */
  AESTR_STATUS_EMPTY_TEXT = 1,
  /*
   A position was outside its valid range.
   */
  AESTR_STATUS_OUT_OF_RANGE = 2,
  /*
   The edit would produce an empty string.
   */
  AESTR_STATUS_EMPTY_RESULT = 3,
  /*
   A required pointer argument was null.
   */
  AESTR_STATUS_NULL_ARGUMENT = 4,
  /*
   An internal invariant failed; the call did not complete.
   */
  AESTR_STATUS_PANIC = 5,
} AestrStatus;

/*
 Opaque preprocessed index over one text.
 */
typedef struct AestrIndex AestrIndex;

/*
 Opaque per-thread query scratch.
 */
typedef struct AestrScratch AestrScratch;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Builds an index over `data[0..len]`. On success writes a handle to `out`.
 The handle must be released with `aestr_index_free`.

 # Safety
 `data` must point to `len` readable bytes and `out` must be a valid
 pointer.
 */
enum AestrStatus aestr_index_new(const uint8_t *data, uintptr_t len, struct AestrIndex **out);

/*
 Releases an index handle. Null is a no-op.

 # Safety
 `index` must be a handle from `aestr_index_new` that has not been freed.
 */
void aestr_index_free(struct AestrIndex *index);

/*
 Length of the indexed text.

 # Safety
 `index` must be a live handle from `aestr_index_new`.
 */
uintptr_t aestr_index_len(const struct AestrIndex *index);

/*
 Allocates query scratch sized for `index`. One scratch serves any number
 of sequential queries; concurrent queries need one scratch per thread.

 # Safety
 `index` must be a live handle and `out` a valid pointer.
 */
enum AestrStatus aestr_scratch_new(const struct AestrIndex *index, struct AestrScratch **out);

/*
 Releases a scratch handle. Null is a no-op.

 # Safety
 `scratch` must be a handle from `aestr_scratch_new` that has not been freed.
 */
void aestr_scratch_free(struct AestrScratch *scratch);

/*
 Longest border of `T' = T[1..i-1] w T[j+1..n]`, written to `out`.

 # Safety
 `index` and `scratch` must be live handles, `w` must point to `w_len`
 readable bytes (or be null with `w_len = 0`), and `out` must be valid.
 */
enum AestrStatus aestr_lbae(const struct AestrIndex *index,
                            struct AestrScratch *scratch,
                            uintptr_t i,
                            uintptr_t j,
                            const uint8_t *w,
                            uintptr_t w_len,
                            uintptr_t *out);

/*
 Shortest cover of `T'`, written to `out`.

 # Safety
 As for `aestr_lbae`.
 */
enum AestrStatus aestr_scae(const struct AestrIndex *index,
                            struct AestrScratch *scratch,
                            uintptr_t i,
                            uintptr_t j,
                            const uint8_t *w,
                            uintptr_t w_len,
                            uintptr_t *out);

/*
 Both answers in one pass. Either output pointer may be null to skip it.

 # Safety
 As for `aestr_lbae`; `out_border`/`out_cover` may each be null.
 */
enum AestrStatus aestr_query(const struct AestrIndex *index,
                             struct AestrScratch *scratch,
                             uintptr_t i,
                             uintptr_t j,
                             const uint8_t *w,
                             uintptr_t w_len,
                             uintptr_t *out_border,
                             uintptr_t *out_cover);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* AESTR_H */
