/* C interface for the tripow tridiagonal spectra library. */

#ifndef TRIPOW_H
#define TRIPOW_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result discriminant for every call; zero is success.
typedef enum TripowStatus {
  TRIPOW_STATUS_OK = 0,
  TRIPOW_STATUS_NULL_POINTER = 1,
  TRIPOW_STATUS_INVALID_ARGUMENT = 2,
  TRIPOW_STATUS_SINGULAR = 3,
  TRIPOW_STATUS_INDEX_OUT_OF_RANGE = 4,
  TRIPOW_STATUS_DEGENERATE_PARAMETER = 5,
  TRIPOW_STATUS_NON_FINITE = 6,
  TRIPOW_STATUS_INTERNAL = 7,
} TripowStatus;

// Matrix family selector matching the library's two constructions.
typedef enum TripowFamily {
  TRIPOW_FAMILY_A = 0,
  TRIPOW_FAMILY_A_DAGGER = 1,
} TripowFamily;

// Opaque dense matrix handle.
typedef struct TripowMatrix TripowMatrix;

// Complex scalar passed by value in both directions.
typedef struct TripowComplex {
  double re;
  double im;
} TripowComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Writes the `n` closed-form eigenvalues of the selected family into
// `out`, which must point to space for `n` values.
//
// # Safety
// `out` must be valid for `n` writes of `TripowComplex`.
enum TripowStatus tripow_eigenvalues(enum TripowFamily family,
                                     uintptr_t n,
                                     struct TripowComplex a,
                                     struct TripowComplex b,
                                     struct TripowComplex *out);

// Computes the `r`-th integer power (family A only) and hands back an
// opaque matrix handle through `out`.
//
// # Safety
// `out` must be a valid pointer; on `Ok` it receives a handle that must
// be released with `tripow_matrix_free`.
enum TripowStatus tripow_power(enum TripowFamily family,
                               uintptr_t n,
                               struct TripowComplex a,
                               struct TripowComplex b,
                               int64_t r,
                               struct TripowMatrix **out);

// Evaluates the determinant through the band recurrence.
//
// # Safety
// `out` must be valid for one write.
enum TripowStatus tripow_det(enum TripowFamily family,
                             uintptr_t n,
                             struct TripowComplex a,
                             struct TripowComplex b,
                             struct TripowComplex *out);

// Returns the order of a matrix handle, or 0 for a null handle.
//
// # Safety
// `matrix` must be null or a live handle from this library.
uintptr_t tripow_matrix_order(const struct TripowMatrix *matrix);

// Reads entry (`row`, `col`), zero-based, from a matrix handle.
//
// # Safety
// `matrix` must be null or a live handle; `out` valid for one write.
enum TripowStatus tripow_matrix_get(const struct TripowMatrix *matrix,
                                    uintptr_t row,
                                    uintptr_t col,
                                    struct TripowComplex *out);

// Releases a matrix handle; null is a no-op.
//
// # Safety
// `matrix` must be null or a handle not freed before.
void tripow_matrix_free(struct TripowMatrix *matrix);

// Writes the `n`-th Fibonacci number as a decimal string; release it with
// `tripow_string_free`.
//
// # Safety
// `out` must be valid for one write.
enum TripowStatus tripow_fib(uint64_t n, char **out);

// Writes the `n`-th Pell number as a decimal string; release it with
// `tripow_string_free`.
//
// # Safety
// `out` must be valid for one write.
enum TripowStatus tripow_pell(uint64_t n, char **out);

// Releases a string produced by this library; null is a no-op.
//
// # Safety
// `text` must be null or a string returned by this library, not freed
// before.
void tripow_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIPOW_H */
