/*
 * C interface to the squarefree Veronese Hilbert series library.
 *
 * Conventions:
 *  - Every fallible call returns a hilbert_status; HILBERT_OK is zero.
 *  - On failure hilbert_last_error() describes the problem. The message is
 *    thread-local and valid until the next failing call on the same thread.
 *  - Exact integers cross the boundary as decimal strings. Strings returned
 *    through a char** are heap-allocated; release them with
 *    hilbert_string_free(). Strings returned as const char* are owned by the
 *    handle they were read from.
 *  - Handles are opaque and released with the matching *_destroy function,
 *    which accepts NULL.
 */
#ifndef HILBERT_HILBERT_H
#define HILBERT_HILBERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HILBERT_BUILDING_LIBRARY)
#    define HILBERT_API __declspec(dllexport)
#  else
#    define HILBERT_API __declspec(dllimport)
#  endif
#else
#  define HILBERT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hilbert_status {
  HILBERT_OK = 0,
  HILBERT_ERR_INVALID_ARGUMENT = 1, /* e.g. n < d, unknown suite, NULL out */
  HILBERT_ERR_RANGE = 2,
  HILBERT_ERR_TOO_LARGE = 3,
  HILBERT_ERR_INTERNAL_DISAGREEMENT = 4,
  HILBERT_ERR_OUT_OF_MEMORY = 5,
  HILBERT_ERR_UNKNOWN = 6,
  HILBERT_STATUS_MAX_ENUM = 0x7fffffff
} hilbert_status;

typedef enum hilbert_method {
  HILBERT_METHOD_FORMULA = 0,
  HILBERT_METHOD_RECURRENCE = 1,
  HILBERT_METHOD_ENUMERATE = 2,
  HILBERT_METHOD_GENFUNC = 3,
  HILBERT_METHOD_SUPPORT = 4,
  HILBERT_METHOD_MAX_ENUM = 0x7fffffff
} hilbert_method;

typedef enum hilbert_depth_method {
  HILBERT_DEPTH_SEARCH = 0,
  HILBERT_DEPTH_FORMULA = 1,
  HILBERT_DEPTH_BOTH = 2,
  HILBERT_DEPTH_MAX_ENUM = 0x7fffffff
} hilbert_depth_method;

typedef struct hilbert_series hilbert_series;
typedef struct hilbert_depth hilbert_depth;
typedef struct hilbert_verify_report hilbert_verify_report;

HILBERT_API const char* hilbert_version(void);
HILBERT_API const char* hilbert_last_error(void);
HILBERT_API void hilbert_string_free(char* s);

/* Generalized binomial C(m, r); zero for r < 0. */
HILBERT_API hilbert_status hilbert_binomial(int64_t m, int64_t r, char** out);

/* ---- closed-form series ---------------------------------------------- */

/* Hilbert series of I_{n,d} as a sum of c T^a (1-T)^-e terms. */
HILBERT_API hilbert_status hilbert_series_create(int32_t n, int32_t d,
                                                 hilbert_series** out);
HILBERT_API void hilbert_series_destroy(hilbert_series* series);

/* New series equal to (1-T)^r times the input. */
HILBERT_API hilbert_status hilbert_series_shift(const hilbert_series* series,
                                                int32_t r,
                                                hilbert_series** out);

HILBERT_API size_t hilbert_series_term_count(const hilbert_series* series);
HILBERT_API hilbert_status hilbert_series_term(const hilbert_series* series,
                                               size_t index, char** coeff,
                                               int32_t* t_power,
                                               int32_t* pole_order);
HILBERT_API hilbert_status hilbert_series_closed_form(
    const hilbert_series* series, char** out);
HILBERT_API hilbert_status hilbert_series_coefficient(
    const hilbert_series* series, int32_t k, char** out);

/* Smallest degree in [0, k_max] with a negative coefficient. *found is set
 * to 0 or 1; degree and value are written only when found. */
HILBERT_API hilbert_status hilbert_series_first_negative(
    const hilbert_series* series, int32_t k_max, int* found, int32_t* degree,
    char** value);

/* ---- Hilbert function ------------------------------------------------- */

/* a_{n,d,k} by the selected route. */
HILBERT_API hilbert_status hilbert_coefficient(int32_t n, int32_t d, int32_t k,
                                               hilbert_method method,
                                               char** out);

/* b_{n,d,k,r}, the T^k coefficient of (1-T)^r H_{I_{n,d}}. */
HILBERT_API hilbert_status hilbert_b_coefficient(int32_t n, int32_t d,
                                                 int32_t k, int32_t r,
                                                 char** out);

/* ---- Hilbert depth ---------------------------------------------------- */

/* Positivity of (1-T)^r H on its finite check window; requires r <= n. */
HILBERT_API hilbert_status hilbert_positivity(int32_t n, int32_t d, int32_t r,
                                              int* is_positive,
                                              int32_t* negative_degree,
                                              char** negative_value);

HILBERT_API hilbert_status hilbert_depth_formula(int32_t n, int32_t d,
                                                 int32_t* out);

/* HILBERT_DEPTH_BOTH fails with HILBERT_ERR_INTERNAL_DISAGREEMENT when the
 * search and the formula differ. */
HILBERT_API hilbert_status hilbert_depth_compute(int32_t n, int32_t d,
                                                 hilbert_depth_method method,
                                                 hilbert_depth** out);
HILBERT_API void hilbert_depth_destroy(hilbert_depth* depth);
HILBERT_API int32_t hilbert_depth_value(const hilbert_depth* depth);
/* -1 when the route was not run. */
HILBERT_API int32_t hilbert_depth_by_search(const hilbert_depth* depth);
HILBERT_API int32_t hilbert_depth_by_formula(const hilbert_depth* depth);
/* Returns 0 when no witness is available (formula-only). */
HILBERT_API int hilbert_depth_witness(const hilbert_depth* depth, int32_t* r,
                                      int32_t* k, const char** coeff);

/* ---- verification suites ---------------------------------------------- */

typedef struct hilbert_verify_options {
  int32_t n_max;   /* <= 0: suite default */
  int32_t k_max;   /* <= 0: suite default */
  int32_t r_max;   /* < 0: suite default */
  int32_t threads; /* <= 0: one worker */
} hilbert_verify_options;

HILBERT_API void hilbert_verify_options_init(hilbert_verify_options* options);

/* suite: "recurrence", "genfunc", "series", "lemma32", "prop33", "tail" or
 * "all". A failing identity is reported through the report, not the status. */
HILBERT_API hilbert_status hilbert_verify_run(
    const char* suite, const hilbert_verify_options* options,
    hilbert_verify_report** out);
HILBERT_API void hilbert_verify_report_destroy(hilbert_verify_report* report);
HILBERT_API size_t hilbert_verify_suite_count(
    const hilbert_verify_report* report);
HILBERT_API hilbert_status hilbert_verify_suite_info(
    const hilbert_verify_report* report, size_t index, const char** name,
    uint64_t* passed, uint64_t* failed, uint64_t* skipped);
/* Returns NULL when the suite had no failure; otherwise a description
 * "<check> (n, d, k, r, lhs, rhs)" owned by the report. */
HILBERT_API const char* hilbert_verify_counterexample(
    const hilbert_verify_report* report, size_t index);
HILBERT_API int hilbert_verify_all_passed(const hilbert_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* HILBERT_HILBERT_H */
