#ifndef QPKNOT_H
#define QPKNOT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QpkStatus {
  QPK_STATUS_OK = 0,
  // A required pointer argument was null.
  QPK_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  QPK_STATUS_INVALID_UTF8 = 2,
  // An expression failed to parse.
  QPK_STATUS_PARSE = 3,
  QPK_STATUS_NOT_DIVISIBLE = 4,
  QPK_STATUS_DIV_BY_ZERO = 5,
  QPK_STATUS_NOT_A_PERFECT_SQUARE = 6,
  // An index, range, name, or pair argument was rejected.
  QPK_STATUS_BAD_ARGUMENT = 7,
  // A value has no form in the requested variables.
  QPK_STATUS_NOT_EXPRESSIBLE = 8,
  // A JSON document was malformed.
  QPK_STATUS_JSON = 9,
  // Verification ran and at least one check failed.
  QPK_STATUS_CHECK_FAILED = 10,
  QPK_STATUS_INTERNAL = 11,
} QpkStatus;

// An exact Laurent polynomial.
typedef struct QpkPoly QpkPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message of the most recent failure on this thread, or null. The
// pointer stays valid until the next failing call on the same thread.
const char *qpk_last_error(void);

// Library version as a static NUL-terminated string.
const char *qpk_version(void);

// Releases a handle. Null is ignored.
//
// # Safety
// `p` must be null or a handle from this library that has not been freed.
void qpk_poly_free(struct QpkPoly *p);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string from this library that has not been freed.
void qpk_string_free(char *s);

// Parses and evaluates an expression such as `"(q^3 - p^3)/(q - p)"`.
//
// # Safety
// `expr` must be null or NUL-terminated; `out` must be null or writable.
enum QpkStatus qpk_parse(const char *expr, struct QpkPoly **out);

// Reads the JSON form produced by [`qpk_to_json`].
//
// # Safety
// `json` must be null or NUL-terminated; `out` must be null or writable.
enum QpkStatus qpk_from_json(const char *json, struct QpkPoly **out);

// Canonical text, e.g. `-a^4 + a^2*t + a^2*t^-1`.
//
// # Safety
// `p` must be null or a live handle; `out` must be null or writable.
enum QpkStatus qpk_to_text(const struct QpkPoly *p, char **out);

// LaTeX body with braced exponents.
//
// # Safety
// `p` must be null or a live handle; `out` must be null or writable.
enum QpkStatus qpk_to_latex(const struct QpkPoly *p, char **out);

// JSON form; reading it back with [`qpk_from_json`] gives an equal value.
//
// # Safety
// `p` must be null or a live handle; `out` must be null or writable.
enum QpkStatus qpk_to_json(const struct QpkPoly *p, char **out);

// `a + b`.
//
// # Safety
// `a`, `b` must be null or live handles; `out` must be null or writable.
enum QpkStatus qpk_add(const struct QpkPoly *a, const struct QpkPoly *b, struct QpkPoly **out);

// `a - b`.
//
// # Safety
// `a`, `b` must be null or live handles; `out` must be null or writable.
enum QpkStatus qpk_sub(const struct QpkPoly *a, const struct QpkPoly *b, struct QpkPoly **out);

// `a * b`.
//
// # Safety
// `a`, `b` must be null or live handles; `out` must be null or writable.
enum QpkStatus qpk_mul(const struct QpkPoly *a, const struct QpkPoly *b, struct QpkPoly **out);

// The exact quotient `a / b`; `QPK_STATUS_NOT_DIVISIBLE` when there is none.
//
// # Safety
// `a`, `b` must be null or live handles; `out` must be null or writable.
enum QpkStatus qpk_exact_div(const struct QpkPoly *a,
                             const struct QpkPoly *b,
                             struct QpkPoly **out);

// The square root with positive leading coefficient.
//
// # Safety
// `p` must be null or a live handle; `out` must be null or writable.
enum QpkStatus qpk_exact_sqrt(const struct QpkPoly *p, struct QpkPoly **out);

// 1 when both handles hold equal polynomials, 0 otherwise or if either is null.
//
// # Safety
// `a`, `b` must be null or live handles.
int32_t qpk_equal(const struct QpkPoly *a, const struct QpkPoly *b);

// `[n]` of a named family: `alexander`, `jones`, `homfly`, `h1`, `h2`, `bmq`.
//
// # Safety
// `family` must be null or NUL-terminated; `out` must be null or writable.
enum QpkStatus qpk_qp_number(const char *family, int64_t n, struct QpkPoly **out);

// The invariant (`alexander`, `jones`, `homfly`) of the torus knot `T(2m+1,2)`.
//
// # Safety
// `kind` must be null or NUL-terminated; `out` must be null or writable.
enum QpkStatus qpk_knot_entry(const char *kind, size_t m, struct QpkPoly **out);

// The skein coefficients `(l1, l2)` of an invariant.
//
// # Safety
// `kind` must be null or NUL-terminated; `l1`, `l2` must be null or writable.
enum QpkStatus qpk_link_coeffs(const char *kind, struct QpkPoly **l1, struct QpkPoly **l2);

// Runs one named check, or every check when `check` is null, over
// `1 <= n <= n_max`. Writes one JSON report per line to `report` and returns
// `QPK_STATUS_CHECK_FAILED` when any check failed.
//
// # Safety
// `check` must be null or NUL-terminated; `report` must be null or writable.
enum QpkStatus qpk_verify(const char *check, size_t n_max, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QPKNOT_H */
