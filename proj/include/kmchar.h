#ifndef KMCHAR_H
#define KMCHAR_H

/*
 * C interface to the kmchar engine: exact characters of standard modules over
 * A1^(1), A2^(1), A2^(2), the level-k / level-(2k+1) duality, q-trace
 * identities and the level-3 A2^(1) series.
 *
 * Every function returns a kmc_status. On failure a message is available
 * from kmc_last_error() on the calling thread until its next call into the
 * library. Strings returned through char** must be released with
 * kmc_string_free, series with kmc_series_free.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(KMCHAR_BUILDING)
#define KMC_API __attribute__((visibility("default")))
#else
#define KMC_API
#endif

typedef enum kmc_status {
  KMC_OK = 0,
  KMC_ERR_INVALID_ARGUMENT = 1,
  KMC_ERR_UNSUPPORTED_LEVEL_PARITY = 2,
  KMC_ERR_NON_UNIT_LEADING_COEFFICIENT = 3,
  KMC_ERR_NON_REGULAR_WEIGHT = 4,
  KMC_ERR_PARITY_CONFLICT = 5,
  KMC_ERR_IDENTITY_VIOLATION = 6,
  KMC_ERR_INSUFFICIENT_ORDER = 7,
  KMC_ERR_INCOMPATIBLE_TRUNCATION = 8,
  KMC_ERR_INTERNAL = 99
} kmc_status;

typedef enum kmc_format { KMC_FORMAT_JSON = 0, KMC_FORMAT_CSV = 1, KMC_FORMAT_TABLE = 2 } kmc_format;

typedef enum kmc_method {
  KMC_METHOD_WEYL_KAC = 0,
  /* congruence product; a1_1 at spec (1,2) and a2_2 at spec (1,1) only */
  KMC_METHOD_PRODUCT = 1
} kmc_method;

/* Truncated series sum_j c_j q^(shift + j/grain), immutable once created. */
typedef struct kmc_series kmc_series;

KMC_API const char* kmc_version(void);
KMC_API const char* kmc_last_error(void);
KMC_API const char* kmc_status_name(kmc_status status);
KMC_API void kmc_string_free(char* s);
KMC_API void kmc_series_free(kmc_series* s);

/*
 * Specialized character F_s(e^{-Lambda} ch L(Lambda)) to q^order.
 * algebra: "a1_1", "a2_1" or "a2_2"; coords: fundamental-weight coordinates.
 * A spec of the form (1,0,...,0) selects the homogeneous grading, available
 * for untwisted algebras and Lambda = level * Lambda_0.
 */
KMC_API kmc_status kmc_character(const char* algebra, const int* coords, size_t ncoords, const int* spec,
                                 size_t nspec, int order, kmc_method method, kmc_series** out);

/* Graded dimension of the level 2k+1 A2^(2) vacuum space, in q^{1/6}. */
KMC_API kmc_status kmc_vacuum_graded_dim(int k, int k0, int order, kmc_series** out);

KMC_API kmc_status kmc_series_from_json(const char* json, kmc_series** out);
KMC_API kmc_status kmc_series_format(const kmc_series* s, kmc_format format, char** out);

KMC_API kmc_status kmc_series_add(const kmc_series* a, const kmc_series* b, kmc_series** out);
KMC_API kmc_status kmc_series_mul(const kmc_series* a, const kmc_series* b, kmc_series** out);
KMC_API kmc_status kmc_series_invert(const kmc_series* a, kmc_series** out);
/* q -> q^(num/den), num/den > 0 */
KMC_API kmc_status kmc_series_substitute_power(const kmc_series* a, long num, long den, kmc_series** out);
/* multiplication by q^(num/den) */
KMC_API kmc_status kmc_series_shift(const kmc_series* a, long num, long den, kmc_series** out);
/* *equal = 1 iff same truncation order and equal coefficients */
KMC_API kmc_status kmc_series_equal(const kmc_series* a, const kmc_series* b, int* equal);
/* Decimal coefficient of q^(num/den); KMC_ERR_INSUFFICIENT_ORDER beyond the order. */
KMC_API kmc_status kmc_series_coefficient(const kmc_series* s, long num, long den, char** out);

/* JSON documents. *all_ok (if not NULL) is set to 1 iff every check held. */
KMC_API kmc_status kmc_describe_json(const char* algebra, char** out);
KMC_API kmc_status kmc_level_weights_json(const char* algebra, int level, char** out);
KMC_API kmc_status kmc_duality_report(int k, int order, int jobs, char** out, int* all_ok);
/* One trace as {central_charge, lowest_weight, prefactor, body}; kind is
 * "chi_tilde", "chi_nu", "f" or "chi_tau". */
KMC_API kmc_status kmc_trace_json(const char* kind, int k, int k0, int order, char** out);
/* k0 < 0 checks every k0 in 0..k */
KMC_API kmc_status kmc_qtrace_report(int k, int k0, int order, int jobs, char** out, int* all_ok);
KMC_API kmc_status kmc_appendix_report(int order, char** out, int* all_ok);
/* format: KMC_FORMAT_JSON or KMC_FORMAT_TABLE */
KMC_API kmc_status kmc_selftest_report(int jobs, kmc_format format, char** out, int* all_ok);

#ifdef __cplusplus
}
#endif

#endif
