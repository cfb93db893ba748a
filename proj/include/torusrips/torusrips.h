#pragma once

/* C interface to the torusrips library.
 *
 * Handles are opaque. Every call that can fail returns a tr_status; the
 * details of the last failure on a context are available as a JSON object
 * {"error": {"kind": ..., "message": ...}} from tr_last_error. Strings
 * returned through char** are owned by the caller and released with
 * tr_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(TORUSRIPS_BUILDING_LIBRARY)
#define TR_API __attribute__((visibility("default")))
#else
#define TR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tr_context tr_context;
typedef struct tr_complex tr_complex;

typedef enum tr_status {
  TR_OK = 0,
  /* The command ran but its outcome is a mismatch or an inconsistency. */
  TR_MISMATCH = 1,
  TR_ERR_VALIDATION = 2,
  TR_ERR_BUDGET = 3,
  TR_ERR_UNSUPPORTED_REGIME = 4,
  TR_ERR_IO = 5,
  TR_ERR_INTERNAL = 6
} tr_status;

typedef enum tr_coefficients { TR_GF2 = 0, TR_INTEGER = 1 } tr_coefficients;

TR_API const char* tr_version(void);
TR_API const char* tr_status_name(tr_status status);

TR_API tr_context* tr_context_new(void);
TR_API void tr_context_free(tr_context* ctx);
TR_API tr_status tr_context_set_simplex_budget(tr_context* ctx, uint64_t budget);
TR_API tr_status tr_context_set_time_budget_ms(tr_context* ctx, int64_t ms);
TR_API tr_status tr_context_set_threads(tr_context* ctx, unsigned threads);
/* Empty string when the last call succeeded. */
TR_API const char* tr_last_error(const tr_context* ctx);

/* Runs "betti", "facets", "certify" or "verify-table".
 *
 * For the first three the request is a config object (space, n, window, k,
 * coefficients, max_dim, simplex_budget, time_budget_secs, format, threads,
 * timing, mode). verify-table takes {"config": {...}, "goldens": path,
 * "filter": {"n", "k", "coefficients", "include_heavy"}}. On TR_OK and
 * TR_MISMATCH *output holds the rendered result in the requested format.
 * Budgets come from the request; the context limits apply to the complex
 * calls below. */
TR_API tr_status tr_run(tr_context* ctx, const char* command, const char* request_json,
                        char** output);
TR_API void tr_string_free(char* s);

/* Clique complexes of VR(space, k) enumerated through max_dim; a negative
 * max_dim enumerates every simplex. */
TR_API tr_status tr_complex_new_torus(tr_context* ctx, int n, int k, int max_dim,
                                      tr_complex** out);
TR_API tr_status tr_complex_new_cycle(tr_context* ctx, int n, int k, int max_dim,
                                      tr_complex** out);
TR_API tr_status tr_complex_new_window(tr_context* ctx, long x_min, long x_max, long y_min,
                                       long y_max, int k, int max_dim, tr_complex** out);
TR_API void tr_complex_free(tr_complex* complex);

TR_API int tr_complex_max_dim(const tr_complex* complex);
TR_API int tr_complex_truncated(const tr_complex* complex);
TR_API uint64_t tr_complex_count(const tr_complex* complex, int dim);

/* Betti numbers for dimensions 0..max_betti_dim written to betti, which
 * must hold max_betti_dim + 1 entries. */
TR_API tr_status tr_complex_betti(tr_context* ctx, const tr_complex* complex,
                                  tr_coefficients coefficients, int max_betti_dim,
                                  uint64_t* betti);

#ifdef __cplusplus
}
#endif
