#ifndef BERNSTEIN_C_H
#define BERNSTEIN_C_H

/*
 * C interface to the unified Bernstein library.
 *
 * Conventions:
 *  - Every fallible call returns a bn_status; on failure the message is
 *    available from bn_last_error() (thread-local, valid until the next call
 *    on the same thread).
 *  - Exact values cross the boundary as rational strings "p/q" (or "p").
 *    Inputs additionally accept finite decimals such as "0.25".
 *  - Strings returned through char** are heap-allocated and must be released
 *    with bn_string_free().
 *  - Opaque handles are created by *_create and released by *_destroy.
 *    Handles are immutable after creation and may be shared between threads.
 */

#include <stddef.h>

#if defined(_WIN32)
#define BN_API __declspec(dllexport)
#elif defined(__GNUC__)
#define BN_API __attribute__((visibility("default")))
#else
#define BN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bn_status {
  BN_OK = 0,
  BN_ERR_INPUT = 1,     /* malformed or out-of-domain argument */
  BN_ERR_NUMERIC = 2,   /* numeric contract violated */
  BN_ERR_DIVERGENT = 3, /* evaluation at a divergence (x = 1) */
  BN_ERR_TAIL = 4,      /* quadrature truncation leaves a tail above tolerance */
  BN_ERR_INTERNAL = 5
} bn_status;

typedef enum bn_format { BN_FORMAT_JSON = 0, BN_FORMAT_CSV = 1, BN_FORMAT_SVG = 2 } bn_format;

typedef enum bn_curve_method {
  BN_CURVE_BASIS = 0,       /* sum P_k B_n(k, x) in floating point */
  BN_CURVE_GENERALIZED = 1, /* sum P_k g_n(k; x), basis evaluated exactly */
  BN_CURVE_DE_CASTELJAU = 2
} bn_curve_method;

typedef struct bn_index bn_index;
typedef struct bn_audit_report bn_audit_report;
typedef struct bn_polygon bn_polygon;

BN_API const char* bn_version(void);
BN_API const char* bn_last_error(void);
BN_API void bn_string_free(char* s);

/* Re-parses and canonicalizes a rational literal. */
BN_API bn_status bn_rational_normalize(const char* text, char** out);
/* Nearest double to a rational literal. */
BN_API bn_status bn_rational_to_double(const char* text, double* out);

/* ---- family index -------------------------------------------------- */

/* k < 0 selects k = b*s. */
BN_API bn_status bn_index_create(long b, long s, long k, bn_index** out);
BN_API void bn_index_destroy(bn_index* idx);
BN_API long bn_index_k(const bn_index* idx);
BN_API bn_status bn_index_weight(const bn_index* idx, char** out);

/* ---- unified family (exact) ----------------------------------------- */

BN_API bn_status bn_eval_closed(long n, const bn_index* idx, const char* x, char** out);
BN_API bn_status bn_eval_recurrence(long n, const bn_index* idx, const char* x, char** out);
/* JSON array of rational strings S_0 .. S_order. */
BN_API bn_status bn_series_expand(const bn_index* idx, const char* x, size_t order, char** out_json);
/* JSON array of monomial coefficients (rational strings). */
BN_API bn_status bn_to_polynomial(long n, const bn_index* idx, char** out_json);
BN_API bn_status bn_derivative(long n, const bn_index* idx, char** out_json);
BN_API bn_status bn_umbral_sum(long n, const bn_index* idx, const char* x, char** out);

/* ---- special numbers (exact) ---------------------------------------- */

BN_API bn_status bn_stirling2(long n, long v, char** out);
BN_API bn_status bn_bernoulli_higher(long n, long v, const char* x, char** out);
BN_API bn_status bn_connection_identity(long n, const bn_index* idx, const char* x, char** lhs, char** rhs);

/* ---- identity audit -------------------------------------------------- */

/* Default index set b, s in {1,2,3}. */
BN_API bn_status bn_audit_run(long n_max, bn_audit_report** out);
BN_API void bn_audit_destroy(bn_audit_report* report);
BN_API size_t bn_audit_count(const bn_audit_report* report);
/* holds = 1 for HOLDS, 0 for FAILS. `identity` stays valid while the report lives. */
BN_API bn_status bn_audit_entry(const bn_audit_report* report, size_t i, const char** identity, int* holds);
BN_API bn_status bn_audit_to_json(const bn_audit_report* report, char** out);

/* ---- interpolation function ------------------------------------------ */

BN_API bn_status bn_interp_eval(double z_re, double z_im, const bn_index* idx, const char* x, double* out_re,
                                double* out_im);
BN_API bn_status bn_interp_negative_integer(long n, const bn_index* idx, const char* x, char** out);
BN_API bn_status bn_beta_form(double z_re, double z_im, const bn_index* idx, const char* x, double* out_re,
                              double* out_im);
/* nodes = 0 and truncation = 0 select the defaults. */
BN_API bn_status bn_mellin(double z_re, double z_im, const bn_index* idx, const char* x, size_t nodes,
                           double truncation, double* out_re, double* out_im);
BN_API bn_status bn_contour(long n, const bn_index* idx, const char* x, double radius, size_t nodes, double* out_re,
                            double* out_im);

/* ---- normalized basis and operator ----------------------------------- */

BN_API bn_status bn_g_basis(long n, long j, const char* x, char** out);
/* Writes g_n(0..n, x) as doubles; capacity must be >= n+1. */
BN_API bn_status bn_basis_values(long n, const char* x, double* out, size_t capacity);
BN_API bn_status bn_partition_check(long n, const char* x, char** out);
/*
 * Built-in functions: "1", "x", "x^2", "x^3", "const:<rational>" (exact) and
 * "sin", "exp", "sqrt", "abs" (floating; abs is |x - 1/2|).
 */
BN_API bn_status bn_operator_apply(const char* function, long n, const char* x, char** out);
/* Convergence table: CSV "n,sup_error" or JSON {"function","rows":[{"n","sup_error"}]}. */
BN_API bn_status bn_operator_table(const char* function, const long* n_values, size_t n_count,
                                   const char* const* grid, size_t grid_count, bn_format format, char** out);

/* ---- Bezier curves --------------------------------------------------- */

/* coords holds point_count * dimension values, dimension 2 or 3. */
BN_API bn_status bn_polygon_create(const double* coords, size_t point_count, int dimension, bn_polygon** out);
/* "x,y:x,y:..." or 3D triples. */
BN_API bn_status bn_polygon_parse(const char* text, bn_polygon** out);
BN_API void bn_polygon_destroy(bn_polygon* polygon);
BN_API size_t bn_polygon_size(const bn_polygon* polygon);
BN_API int bn_polygon_dimension(const bn_polygon* polygon);
/* out receives 3 doubles (z = 0 for planar polygons). */
BN_API bn_status bn_curve_eval(const bn_polygon* polygon, double x, bn_curve_method method, double* out);
/* Polygon must have exactly 4 points. masses receives 4 doubles, point 3. */
BN_API bn_status bn_cubic_mass_demo(const bn_polygon* polygon, double x, double* masses, double* point);
/* format BN_FORMAT_SVG or BN_FORMAT_JSON; samples >= 2. */
BN_API bn_status bn_curve_export(const bn_polygon* polygon, size_t samples, bn_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BERNSTEIN_C_H */
