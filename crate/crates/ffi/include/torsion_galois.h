/* Generated by cbindgen from crates/ffi. Do not edit. */

#ifndef TORSION_GALOIS_H
#define TORSION_GALOIS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TgStatus {
  TG_STATUS_OK = 0,
  TG_STATUS_NULL_POINTER = 1,
  TG_STATUS_INVALID_ARGUMENT = 2,
  TG_STATUS_PARSE = 3,
  TG_STATUS_SINGULAR_CURVE = 4,
  TG_STATUS_INADMISSIBLE_U = 5,
  TG_STATUS_NOT_PRIME = 6,
  /**
   * Exact arithmetic failed (inexact division, not squarefree).
   */
  TG_STATUS_ARITHMETIC = 7,
  /**
   * A requested consistency check did not hold.
   */
  TG_STATUS_CHECK_FAILED = 8,
  TG_STATUS_INTERNAL = 9,
  TG_STATUS_PANIC = 10,
} TgStatus;

typedef enum TgMethod {
  TG_METHOD_MATRIX = 0,
  TG_METHOD_RESULTANT = 1,
  /**
   * Both routes; fails with `CheckFailed` unless they agree.
   */
  TG_METHOD_BOTH = 2,
} TgMethod;

/**
 * A curve over Q or Q[t].
 */
typedef struct TgCurve TgCurve;

/**
 * A polynomial over Q or Q[t].
 */
typedef struct TgPoly TgPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread; do not free.
 */
const char *tg_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void tg_string_free(char *s);

/**
 * Parses `"a1,a2,a3,a4,a6"`; coefficients may be polynomials in `t`.
 *
 * # Safety
 * `coeffs` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TgStatus tg_curve_parse(const char *coeffs, struct TgCurve **out);

/**
 * # Safety
 * `curve` must come from [`tg_curve_parse`] and not have been freed.
 */
void tg_curve_free(struct TgCurve *curve);

/**
 * # Safety
 * `poly` must come from this library and not have been freed.
 */
void tg_poly_free(struct TgPoly *poly);

/**
 * Division polynomial cofactor (`psi_n`, or `psi_n / psi_2` for even `n`),
 * or the primitive part when `primitive` is set.
 *
 * # Safety
 * `curve` must be a live handle and `out` a valid pointer.
 */
enum TgStatus tg_divpoly(const struct TgCurve *curve,
                         uint32_t n,
                         bool primitive,
                         struct TgPoly **out);

/**
 * Characteristic polynomial of `u = a y + b x + c` (given as `"a,b,c"`, or
 * null for `y`) on the points of exact order `n`.
 *
 * # Safety
 * `curve` must be a live handle, `u` null or NUL-terminated, `out` valid.
 */
enum TgStatus tg_charpoly(const struct TgCurve *curve,
                          const char *u,
                          uint32_t n,
                          enum TgMethod method,
                          struct TgPoly **out);

/**
 * Degree of a polynomial; `-1` for zero or a null handle.
 *
 * # Safety
 * `poly` must be null or a live handle.
 */
int64_t tg_poly_degree(const struct TgPoly *poly);

/**
 * Polynomial JSON `{"ring", "coeffs"}`, ascending. Free with [`tg_string_free`].
 *
 * # Safety
 * `poly` must be a live handle and `out` a valid pointer.
 */
enum TgStatus tg_poly_to_json(const struct TgPoly *poly, char **out);

/**
 * Mod-3 image classification as JSON `{label, qualifier, evidence}`.
 *
 * # Safety
 * `curve` must be a live handle over Q and `out` a valid pointer.
 */
enum TgStatus tg_classify_mod3(const struct TgCurve *curve, uint64_t probe_bound, char **out);

/**
 * Frobenius probe for `-id` mod `ell`. Writes the witness prime, or 0 when
 * none exists up to `bound`.
 *
 * # Safety
 * `curve` must be a live handle over Q and `out_prime` a valid pointer.
 */
enum TgStatus tg_minus_id(const struct TgCurve *curve,
                          uint64_t ell,
                          uint64_t bound,
                          uint64_t *out_prime);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORSION_GALOIS_H */
