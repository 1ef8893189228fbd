#ifndef GENFROB_H
#define GENFROB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 How a generalized Frobenius number was obtained.
 */
typedef enum GfMethod {
  GF_METHOD_TWO_VAR_CLOSED_FORM = 0,
  GF_METHOD_BRUTE_FORCE = 1,
  GF_METHOD_GCD_REDUCTION = 2,
  GF_METHOD_THEOREM1 = 3,
} GfMethod;

/*
 Status code returned by every fallible call.
 */
typedef enum GfStatus {
  GF_STATUS_OK = 0,
  GF_STATUS_NULL_POINTER = 1,
  GF_STATUS_INVALID_INPUT = 2,
  GF_STATUS_NOT_COPRIME = 3,
  GF_STATUS_WRONG_ARITY = 4,
  GF_STATUS_OVERFLOW = 5,
  GF_STATUS_CAPACITY_EXCEEDED = 6,
  GF_STATUS_NO_APPLICABLE_CASE = 7,
  GF_STATUS_CANCELLED = 8,
  GF_STATUS_OUT_OF_RANGE = 9,
  GF_STATUS_INTERNAL = 10,
} GfStatus;

/*
 Which route `gf_gen_frobenius` takes.
 */
typedef enum GfStrategy {
  GF_STRATEGY_AUTO = 0,
  GF_STRATEGY_BRUTE = 1,
  GF_STRATEGY_CLOSED = 2,
  GF_STRATEGY_REDUCE = 3,
} GfStrategy;

/*
 Opaque list of closed-form cases of a triple.
 */
typedef struct GfCases GfCases;

/*
 Opaque table of `d(0; A) ... d(N; A)`.
 */
typedef struct GfSeries GfSeries;

/*
 Opaque validated tuple.
 */
typedef struct GfTuple GfTuple;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 ABI version, `major * 10000 + minor * 100 + patch`.
 */
uint32_t gf_version(void);

/*
 Message for the last non-`Ok` status on this thread, or NULL.
 The pointer stays valid until the next failing call on the same thread.
 */
const char *gf_last_error_message(void);

/*
 Creates a tuple from `len >= 2` positive parts.

 # Safety
 `parts` must point to `len` readable `int64_t`; `out` must be writable.
 */
enum GfStatus gf_tuple_new(const int64_t *parts, size_t len, struct GfTuple **out);

/*
 # Safety
 `tuple` must come from `gf_tuple_new` and not be freed twice. NULL is ignored.
 */
void gf_tuple_free(struct GfTuple *tuple);

/*
 Number of parts, or 0 for NULL.

 # Safety
 `tuple` must be a live handle or NULL.
 */
size_t gf_tuple_len(const struct GfTuple *tuple);

/*
 gcd of all parts.

 # Safety
 `tuple` must be a live handle; `out` must be writable.
 */
enum GfStatus gf_tuple_gcd(const struct GfTuple *tuple, int64_t *out);

/*
 `d(n; A)`; zero for negative `n`.

 # Safety
 `tuple` must be a live handle; `out` must be writable.
 */
enum GfStatus gf_denumerant(const struct GfTuple *tuple, int64_t n, uint64_t *out);

/*
 `d(n; a, b)` by the congruence count.

 # Safety
 `out` must be writable.
 */
enum GfStatus gf_denumerant_two(int64_t n, int64_t a, int64_t b, uint64_t *out);

/*
 Tabulates `d(0; A) ... d(n_max; A)`.

 # Safety
 `tuple` must be a live handle; `out` must be writable.
 */
enum GfStatus gf_series_new(const struct GfTuple *tuple, uint64_t n_max, struct GfSeries **out);

/*
 Number of entries (`n_max + 1`), or 0 for NULL.

 # Safety
 `series` must be a live handle or NULL.
 */
size_t gf_series_len(const struct GfSeries *series);

/*
 # Safety
 `series` must be a live handle; `out` must be writable.
 */
enum GfStatus gf_series_get(const struct GfSeries *series, uint64_t n, uint64_t *out);

/*
 # Safety
 `series` must come from `gf_series_new` and not be freed twice. NULL is ignored.
 */
void gf_series_free(struct GfSeries *series);

/*
 `(s+1)ab - a - b` for coprime `a, b`; `s = -1` gives `-2`.

 # Safety
 `out` must be writable.
 */
enum GfStatus gf_gen_frobenius_two(int64_t a, int64_t b, int64_t s, int64_t *out);

/*
 `g(A; s)`. `out_method` may be NULL.

 # Safety
 `tuple` must be a live handle; `out_value` must be writable.
 */
enum GfStatus gf_gen_frobenius(const struct GfTuple *tuple,
                               uint64_t s,
                               enum GfStrategy strategy,
                               int64_t *out_value,
                               enum GfMethod *out_method);

/*
 Closed-form cases of a coprime triple; the list may be empty.

 # Safety
 `tuple` must be a live handle; `out` must be writable.
 */
enum GfStatus gf_cases_detect(const struct GfTuple *tuple, struct GfCases **out);

/*
 # Safety
 `cases` must be a live handle or NULL.
 */
size_t gf_cases_len(const struct GfCases *cases);

/*
 Pivot position (1-based) and `d` of case `index`.

 # Safety
 `cases` must be a live handle; both outputs must be writable.
 */
enum GfStatus gf_cases_info(const struct GfCases *cases,
                            size_t index,
                            size_t *out_pivot,
                            int64_t *out_d);

/*
 Index `sigma` and value `g(A; sigma)` of case `index` at `s`.

 # Safety
 `cases` must be a live handle; both outputs must be writable.
 */
enum GfStatus gf_cases_row(const struct GfCases *cases,
                           size_t index,
                           uint64_t s,
                           uint64_t *out_sigma,
                           int64_t *out_g);

/*
 # Safety
 `cases` must come from `gf_cases_detect` and not be freed twice. NULL is ignored.
 */
void gf_cases_free(struct GfCases *cases);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GENFROB_H */
