#ifndef ZTT_H
#define ZTT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum ZttStatus {
  ZTT_STATUS_OK = 0,
  ZTT_STATUS_NULL_POINTER = 1,
  ZTT_STATUS_INVALID_UTF8 = 2,
  ZTT_STATUS_INVALID_ARGUMENT = 3,
  ZTT_STATUS_WEIGHT_CONFIG = 4,
  ZTT_STATUS_NOT_DISTINCT = 5,
  ZTT_STATUS_OUT_OF_RANGE = 6,
  ZTT_STATUS_BUDGET_EXCEEDED = 7,
  ZTT_STATUS_DIVISION_BY_ZERO = 8,
  ZTT_STATUS_UNSUPPORTED = 9,
  ZTT_STATUS_PANIC = 10,
} ZttStatus;

// Algorithm selector for [`ztt_theta_compute`].
typedef enum ZttAlgorithm {
  ZTT_ALGORITHM_PRODUCT = 0,
  ZTT_ALGORITHM_NEWTON = 1,
  ZTT_ALGORITHM_BELL = 2,
  ZTT_ALGORITHM_DETERMINANT = 3,
  ZTT_ALGORITHM_CONVOLUTION = 4,
} ZttAlgorithm;

// An exact probability mass function.
typedef struct ZttPmf ZttPmf;

// The polynomial `theta_{n;k}(t)`.
typedef struct ZttTheta ZttTheta;

// A weight sequence.
typedef struct ZttWeights ZttWeights;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *ztt_version(void);

// Message of the last failed call on this thread, or NULL after a success.
// The pointer stays valid until the next call into the library on this thread.
const char *ztt_last_error_message(void);

// Releases a string returned by the library. NULL is ignored.
//
// # Safety
// `s` must be NULL or a string obtained from this library that has not been freed.
void ztt_string_free(char *s);

// Builtin weights: `ones`, `linear` or `zeta:<m>`.
//
// # Safety
// `name` must be a NUL-terminated string and `out` a valid pointer.
enum ZttStatus ztt_weights_builtin(const char *name, struct ZttWeights **out);

// Weights from a JSON configuration document.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum ZttStatus ztt_weights_from_json(const char *json, struct ZttWeights **out);

// Custom finite weights from `len` rational strings such as `"3/4"`.
//
// # Safety
// `values` must point to `len` NUL-terminated strings and `out` must be valid.
enum ZttStatus ztt_weights_custom(const char *const *values, size_t len, struct ZttWeights **out);

// # Safety
// `w` must be NULL or a handle from this library that has not been freed.
void ztt_weights_free(struct ZttWeights *w);

// Computes `theta_{n;k}(t)`; `algorithm` is one of the `ZttAlgorithm` values.
//
// # Safety
// `weights` must be a live handle and `out` a valid pointer.
enum ZttStatus ztt_theta_compute(const struct ZttWeights *weights,
                                 size_t n,
                                 size_t k,
                                 uint32_t algorithm,
                                 struct ZttTheta **out);

// Number of stored coefficients (degree plus one; zero for the zero polynomial).
//
// # Safety
// `theta` must be a live handle and `out` a valid pointer.
enum ZttStatus ztt_theta_len(const struct ZttTheta *theta, size_t *out);

// Coefficient of `t^i` as an exact `p/q` string; free with [`ztt_string_free`].
//
// # Safety
// `theta` must be a live handle and `out` a valid pointer.
enum ZttStatus ztt_theta_coeff_string(const struct ZttTheta *theta, size_t i, char **out);

// Coefficient of `t^i` rounded to a double.
//
// # Safety
// `theta` must be a live handle and `out` a valid pointer.
enum ZttStatus ztt_theta_coeff_f64(const struct ZttTheta *theta, size_t i, double *out);

// Exact value at the rational `t`, given as a string such as `"1/2"`.
//
// # Safety
// `theta` must be a live handle, `t` a NUL-terminated string and `out` a valid pointer.
enum ZttStatus ztt_theta_eval_string(const struct ZttTheta *theta, const char *t, char **out);

// # Safety
// `theta` must be NULL or a handle from this library that has not been freed.
void ztt_theta_free(struct ZttTheta *theta);

// Law of `S_{n,k}`.
//
// # Safety
// `weights` must be a live handle and `out` a valid pointer.
enum ZttStatus ztt_pmf_sigma(const struct ZttWeights *weights,
                             size_t n,
                             size_t k,
                             struct ZttPmf **out);

// Smallest support point; mass `i` sits at `offset + i`.
//
// # Safety
// `pmf` must be a live handle and `out` a valid pointer.
enum ZttStatus ztt_pmf_offset(const struct ZttPmf *pmf, int64_t *out);

// Number of stored masses.
//
// # Safety
// `pmf` must be a live handle and `out` a valid pointer.
enum ZttStatus ztt_pmf_len(const struct ZttPmf *pmf, size_t *out);

// Mass `i` as an exact `p/q` string; free with [`ztt_string_free`].
//
// # Safety
// `pmf` must be a live handle and `out` a valid pointer.
enum ZttStatus ztt_pmf_prob_string(const struct ZttPmf *pmf, size_t i, char **out);

// Mass `i` rounded to a double.
//
// # Safety
// `pmf` must be a live handle and `out` a valid pointer.
enum ZttStatus ztt_pmf_prob_f64(const struct ZttPmf *pmf, size_t i, double *out);

// Exact mean as a `p/q` string; free with [`ztt_string_free`].
//
// # Safety
// `pmf` must be a live handle and `out` a valid pointer.
enum ZttStatus ztt_pmf_mean_string(const struct ZttPmf *pmf, char **out);

// Exact variance as a `p/q` string; free with [`ztt_string_free`].
//
// # Safety
// `pmf` must be a live handle and `out` a valid pointer.
enum ZttStatus ztt_pmf_variance_string(const struct ZttPmf *pmf, char **out);

// # Safety
// `pmf` must be NULL or a handle from this library that has not been freed.
void ztt_pmf_free(struct ZttPmf *pmf);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZTT_H */
