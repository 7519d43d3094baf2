#ifndef CHRISTOFFEL_LAB_H
#define CHRISTOFFEL_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of comparing a value with 3.
 */
typedef enum ClComparison {
  CL_COMPARISON_LESS = -1,
  CL_COMPARISON_EQUAL = 0,
  CL_COMPARISON_GREATER = 1,
} ClComparison;

/**
 * Which word predicate [`cl_word_test`] evaluates.
 */
typedef enum ClPredicate {
  CL_PREDICATE_BALANCED = 0,
  CL_PREDICATE_CENTRAL = 1,
  CL_PREDICATE_CHRISTOFFEL = 2,
  CL_PREDICATE_PALINDROME = 3,
  CL_PREDICATE_MARKOFF = 4,
  /**
   * The Markoff condition for the periodic word `w^ω`.
   */
  CL_PREDICATE_PERIODIC_MARKOFF_CONDITION = 5,
} ClPredicate;

/**
 * Result code of every fallible call.
 */
typedef enum ClStatus {
  CL_STATUS_OK = 0,
  CL_STATUS_NULL_POINTER = 1,
  /**
   * Malformed input (bad letters, syntax, non-coprime slope, …).
   */
  CL_STATUS_INVALID_INPUT = 2,
  /**
   * Well-formed input violating a precondition.
   */
  CL_STATUS_DOMAIN = 3,
  /**
   * A continued-fraction prefix was too short.
   */
  CL_STATUS_PRECISION = 4,
  /**
   * Non-UTF-8 string argument.
   */
  CL_STATUS_UTF8 = 5,
  /**
   * A Rust panic was caught at the boundary.
   */
  CL_STATUS_INTERNAL = 6,
} ClStatus;

/**
 * Opaque bi-infinite word.
 */
typedef struct ClBiInfinite ClBiInfinite;

/**
 * Opaque finite word over {a, b}.
 */
typedef struct ClWord ClWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or NULL. Valid until the
 * next failing call on the same thread; do not free.
 */
const char *cl_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be NULL or a pointer returned by this library and not yet freed.
 */
void cl_string_free(char *s);

/**
 * Parses a word over {a, b}.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum ClStatus cl_word_parse(const char *text, struct ClWord **out);

/**
 * # Safety
 * `w` must be NULL or a handle from this library, not yet freed.
 */
void cl_word_free(struct ClWord *w);

/**
 * Number of letters, or 0 for NULL.
 *
 * # Safety
 * `w` must be NULL or a live handle.
 */
size_t cl_word_len(const struct ClWord *w);

/**
 * The word as a new string (free with [`cl_string_free`]); NULL for NULL.
 *
 * # Safety
 * `w` must be NULL or a live handle.
 */
char *cl_word_to_string(const struct ClWord *w);

/**
 * Lower Christoffel word with `p` a's and `q` b's (`gcd(p, q) = 1`).
 *
 * # Safety
 * `out` must be writable.
 */
enum ClStatus cl_lower_christoffel(uint64_t p, uint64_t q, struct ClWord **out);

/**
 * Upper Christoffel word with `p` a's and `q` b's (`gcd(p, q) = 1`).
 *
 * # Safety
 * `out` must be writable.
 */
enum ClStatus cl_upper_christoffel(uint64_t p, uint64_t q, struct ClWord **out);

/**
 * Evaluates a predicate on a word.
 *
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum ClStatus cl_word_test(const struct ClWord *w, enum ClPredicate predicate, bool *out);

/**
 * Parses a bi-infinite word, e.g. `periodic:aabab`, `b4:m=aa,x=a,y=b`,
 * `cut:slope=cf:0,1,3,1,1;intercept=1/2`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum ClStatus cl_biinfinite_parse(const char *text, struct ClBiInfinite **out);

/**
 * # Safety
 * `s` must be NULL or a handle from this library, not yet freed.
 */
void cl_biinfinite_free(struct ClBiInfinite *s);

/**
 * Letters at indices `[from, to)` as a new word handle.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum ClStatus cl_biinfinite_window(const struct ClBiInfinite *s,
                                   int64_t from,
                                   int64_t to,
                                   struct ClWord **out);

/**
 * Class 1–4 (M1–M4). `span` is the checked half-width; 0 selects the default.
 *
 * # Safety
 * `s` must be a live handle; `class_out` must be writable.
 */
enum ClStatus cl_classify(const struct ClBiInfinite *s, size_t span, uint32_t *class_out);

/**
 * `Λ` of the periodic sequence `period[0..len]^ω` (entries 1 or 2).
 * Writes the comparison with 3 to `vs_3` and, when `json_out` is not NULL,
 * the full report as JSON (free with [`cl_string_free`]).
 *
 * # Safety
 * `period` must point to `len` readable values; out pointers may be NULL.
 */
enum ClStatus cl_spectrum_periodic(const uint32_t *period,
                                   size_t len,
                                   enum ClComparison *vs_3,
                                   char **json_out);

/**
 * Spectrum report of a bi-infinite {a,b} word under the doubling valuation
 * `a ↦ 1,1`, `b ↦ 2,2`.
 *
 * # Safety
 * `s` must be a live handle; out pointers may be NULL.
 */
enum ClStatus cl_spectrum_double(const struct ClBiInfinite *s,
                                 enum ClComparison *vs_3,
                                 char **json_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHRISTOFFEL_LAB_H */
