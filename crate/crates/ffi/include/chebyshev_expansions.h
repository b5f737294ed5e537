#ifndef CHEBYSHEV_EXPANSIONS_H
#define CHEBYSHEV_EXPANSIONS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Largest degree accepted by the constructors.
#define CHEB_MAX_DEGREE 256

// Which computation produces expansion coefficients.
typedef enum ChebSource {
  CHEB_SOURCE_CLOSED_FORM = 0,
  CHEB_SOURCE_PROJECTION = 1,
  CHEB_SOURCE_TRIANGULAR_SOLVE = 2,
  // All three, required to agree; the closed form is kept.
  CHEB_SOURCE_CROSS_VALIDATED = 3,
} ChebSource;

typedef enum ChebStatus {
  CHEB_STATUS_OK = 0,
  CHEB_STATUS_NULL_POINTER = 1,
  CHEB_STATUS_INVALID_ARGUMENT = 2,
  CHEB_STATUS_OUT_OF_RANGE = 3,
  // Two independent computations disagreed.
  CHEB_STATUS_MISMATCH = 4,
  CHEB_STATUS_INTERNAL = 5,
} ChebStatus;

// Coefficients of one polynomial in the `T` or `U` basis.
typedef struct ChebExpansion ChebExpansion;

// A polynomial in the monomial basis.
typedef struct ChebPoly ChebPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Description of the last failure on this thread, or `""`. Valid until the
// next call into this library from the same thread; do not free.
const char *cheb_last_error(void);

// Library version, static storage.
const char *cheb_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void cheb_string_free(char *s);

// Builds `family_n(x)` for `family` in `bernoulli`, `euler`, `hermite`,
// `chebyshev-t`, `chebyshev-u`.
//
// # Safety
// `family` must be a NUL-terminated string; `out` must be writable.
enum ChebStatus cheb_poly_new(const char *family, uint32_t n, struct ChebPoly **out);

// # Safety
// `p` must be null or a live handle from [`cheb_poly_new`].
void cheb_poly_free(struct ChebPoly *p);

// Degree of `p`; `-1` for the zero polynomial.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum ChebStatus cheb_poly_degree(const struct ChebPoly *p, int64_t *out);

// Canonical text, e.g. `8*x^4 - 8*x^2 + 1`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum ChebStatus cheb_poly_to_string(const struct ChebPoly *p, char **out);

// Coefficient of `x^k` as `p/q` text; `0` above the degree.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum ChebStatus cheb_poly_coefficient(const struct ChebPoly *p, size_t k, char **out);

// Expands `family_n(x)` (`monomial`, `bernoulli`, `euler`, `hermite`) in
// basis `"T"` or `"U"`. With `CHEB_SOURCE_CROSS_VALIDATED` a disagreement
// between the three computations returns `CHEB_STATUS_MISMATCH`.
//
// # Safety
// `family` and `basis` must be NUL-terminated strings; `out` must be writable.
enum ChebStatus cheb_expansion_new(const char *family,
                                   const char *basis,
                                   uint32_t n,
                                   enum ChebSource source,
                                   struct ChebExpansion **out);

// # Safety
// `e` must be null or a live handle from [`cheb_expansion_new`].
void cheb_expansion_free(struct ChebExpansion *e);

// Number of coefficients, `n + 1`.
//
// # Safety
// `e` must be a live handle; `out` must be writable.
enum ChebStatus cheb_expansion_len(const struct ChebExpansion *e, size_t *out);

// Coefficient of basis element `k` as `p/q` text.
//
// # Safety
// `e` must be a live handle; `out` must be writable.
enum ChebStatus cheb_expansion_coefficient(const struct ChebExpansion *e, size_t k, char **out);

// The compact JSON record, as printed by `chebexp expand --format json`.
//
// # Safety
// `e` must be a live handle; `out` must be writable.
enum ChebStatus cheb_expansion_to_json(const struct ChebExpansion *e, char **out);

// Runs the three-way check for one `(family, basis, n)`. `CHEB_STATUS_OK` on
// agreement, `CHEB_STATUS_MISMATCH` otherwise.
//
// # Safety
// `family` and `basis` must be NUL-terminated strings.
enum ChebStatus cheb_cross_validate(const char *family, const char *basis, uint32_t n);

// `∫ (1-x²)^(k∓1/2) x^m dx` over `[-1, 1]` as `(p/q)*pi` or `0`;
// `sign` is `"minus"` or `"plus"`.
//
// # Safety
// `sign` must be a NUL-terminated string; `out` must be writable.
enum ChebStatus cheb_moment(uint32_t k, const char *sign, uint32_t m, char **out);

// Runs a verification target (or `"all"`) up to `max_n`. Counts go to
// `passed` and `total`; `report`, if not null, receives the full text
// report. Returns `CHEB_STATUS_MISMATCH` if any check failed.
//
// # Safety
// `target` must be a NUL-terminated string; `passed` and `total` must be
// writable; `report` may be null.
enum ChebStatus cheb_verify(const char *target,
                            uint32_t max_n,
                            size_t *passed,
                            size_t *total,
                            char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHEBYSHEV_EXPANSIONS_H */
