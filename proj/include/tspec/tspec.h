/* C interface to the toeplitz spectra library.
 *
 * Every function returning int returns a tspec_status. On failure the
 * message is available from tspec_last_error() on the calling thread.
 * Handles are opaque and owned by the caller; free them with the matching
 * *_free function. Output arrays are caller-allocated.
 */
#ifndef TSPEC_TSPEC_H
#define TSPEC_TSPEC_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef TSPEC_BUILDING_LIBRARY
#    define TSPEC_API __declspec(dllexport)
#  else
#    define TSPEC_API __declspec(dllimport)
#  endif
#else
#  define TSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  TSPEC_OK = 0,
  TSPEC_INVALID_ARGUMENT = 1,
  TSPEC_DOMAIN = 2,
  TSPEC_NOT_CONVERGED = 3,
  TSPEC_BUFFER_TOO_SMALL = 4,
  TSPEC_IO = 5,
  TSPEC_INTERNAL = 6
} tspec_status;

typedef enum {
  TSPEC_KIND_SINGLE = 0,
  TSPEC_KIND_SUM = 1,
  TSPEC_KIND_LINEAR_H = 2,
  TSPEC_KIND_H_TO_H = 3
} tspec_kind;

typedef enum { TSPEC_BETA_POWER_LOG = 0, TSPEC_BETA_H_TO_H = 1 } tspec_beta_form;

typedef enum {
  TSPEC_CURVE_ETA = 0,
  TSPEC_CURVE_ETA_PRIME = 1,
  TSPEC_CURVE_PSI = 2,
  TSPEC_CURVE_PHI = 3
} tspec_curve;

typedef struct tspec_symbol tspec_symbol;
typedef struct tspec_momentary tspec_momentary;
typedef struct tspec_grid tspec_grid;

typedef struct {
  size_t nodes;
  double exclusion_radius;
  double fd_step;
} tspec_pv_config;

typedef struct {
  double range_min;
  double range_max;
  double endpoint_value;
  double endpoint_slope;
  double endpoint_curvature;
  double peak_curvature;
  int monotone_on_half_period;
  int is_simple_loop;
} tspec_simple_loop_report;

typedef struct {
  double max_error;
  double normalized_max;
  int k;
  size_t n;
} tspec_error_summary;

/* Library state */
TSPEC_API const char* tspec_version(void);
TSPEC_API const char* tspec_last_error(void);
TSPEC_API const char* tspec_status_string(int status);
TSPEC_API void tspec_set_threads(int count);
TSPEC_API int tspec_get_threads(void);
TSPEC_API void tspec_pv_config_default(tspec_pv_config* cfg);

/* Symbols */
TSPEC_API int tspec_symbol_create(const double* coeffs, size_t count, tspec_symbol** out);
TSPEC_API int tspec_symbol_laplacian_power(unsigned q, tspec_symbol** out);
TSPEC_API int tspec_symbol_kms(double rho, double tol, tspec_symbol** out);
TSPEC_API int tspec_symbol_from_text(const char* text, tspec_symbol** out);
TSPEC_API int tspec_symbol_load(const char* path, tspec_symbol** out);
TSPEC_API int tspec_symbol_save(const tspec_symbol* s, const char* path);
TSPEC_API int tspec_symbol_clone(const tspec_symbol* s, tspec_symbol** out);
TSPEC_API void tspec_symbol_free(tspec_symbol* s);
TSPEC_API int tspec_symbol_bandwidth(const tspec_symbol* s, size_t* out);
/* Writes min(cap, m+1) coefficients and stores m+1 in *count. */
TSPEC_API int tspec_symbol_coeffs(const tspec_symbol* s, double* buf, size_t cap, size_t* count);
TSPEC_API int tspec_symbol_eval(const tspec_symbol* s, double theta, double* out);
TSPEC_API int tspec_symbol_derivative(const tspec_symbol* s, double theta, int order, double* out);
TSPEC_API int tspec_symbol_add(const tspec_symbol* a, const tspec_symbol* b, tspec_symbol** out);
TSPEC_API int tspec_symbol_scale(const tspec_symbol* a, double c, tspec_symbol** out);
TSPEC_API int tspec_symbol_multiply(const tspec_symbol* a, const tspec_symbol* b,
                                    tspec_symbol** out);
TSPEC_API int tspec_symbol_wiener_norm(const tspec_symbol* s, double alpha, double* out);
TSPEC_API int tspec_symbol_simple_loop_check(const tspec_symbol* s, size_t grid_size, double tol,
                                             tspec_simple_loop_report* out);

/* Momentary symbols */
TSPEC_API int tspec_beta_eval(int form, double c, double p, unsigned q, double h, double* out);
TSPEC_API int tspec_momentary_create(const tspec_symbol* base, tspec_momentary** out);
TSPEC_API int tspec_momentary_add_term(tspec_momentary* ms, int form, double c, double p,
                                       unsigned q, const tspec_symbol* sym);
TSPEC_API int tspec_momentary_fn_family(double alpha1, double alpha0, tspec_momentary** out);
TSPEC_API int tspec_momentary_instantiate(const tspec_momentary* ms, size_t n,
                                          tspec_symbol** out);
TSPEC_API void tspec_momentary_free(tspec_momentary* ms);

/* Reference eigensolver. tol <= 0 selects the default. out has n entries. */
TSPEC_API int tspec_toeplitz_eigenvalues(const tspec_symbol* s, size_t n, double tol, double* out);
TSPEC_API int tspec_toeplitz_count_below(const tspec_symbol* s, size_t n, double x, size_t* out);

/* Quadrature. cfg may be NULL for defaults; g is ignored for eta curves. */
TSPEC_API int tspec_b_eval(const tspec_symbol* f, double sigma, double s, double* out);
TSPEC_API int tspec_curve_eval(int curve, const tspec_symbol* f, const tspec_symbol* g,
                               const double* s, size_t count, const tspec_pv_config* cfg,
                               double* out);
TSPEC_API int tspec_pv_unit_integral(double s, const tspec_pv_config* cfg, double* out);

/* Expansion coefficients at one angle. */
TSPEC_API int tspec_c12(const tspec_symbol* f, double s, const tspec_pv_config* cfg,
                        double out[2]);
TSPEC_API int tspec_q12(const tspec_symbol* f, const tspec_symbol* g, double s,
                        const tspec_pv_config* cfg, double out[2]);
TSPEC_API int tspec_psi12(const tspec_symbol* f, const tspec_symbol* g, double s,
                          const tspec_pv_config* cfg, double out[2]);
/* out = Γ11, Γ10, Γ22, Γ21, Γ20 */
TSPEC_API int tspec_gammas(const tspec_symbol* f, const tspec_symbol* g, double s,
                           const tspec_pv_config* cfg, double out[5]);

/* Eigenvalue approximations; g may be NULL for TSPEC_KIND_SINGLE. */
TSPEC_API int tspec_exact_eigenvalues(int kind, const tspec_symbol* f, const tspec_symbol* g,
                                      size_t n, double* out);
TSPEC_API int tspec_approx_eigenvalues(int kind, const tspec_symbol* f, const tspec_symbol* g,
                                       size_t n, int k, const tspec_pv_config* cfg, double* out);
/* k = 1, 2, 3 at once; each output has n entries. */
TSPEC_API int tspec_approx_eigenvalues_all(int kind, const tspec_symbol* f,
                                           const tspec_symbol* g, size_t n,
                                           const tspec_pv_config* cfg, double* out_k1,
                                           double* out_k2, double* out_k3);
/* per_j may be NULL. */
TSPEC_API int tspec_error_report(const double* exact, const double* approx, size_t n, int kind,
                                 int k, double* per_j, tspec_error_summary* out);
TSPEC_API int tspec_correction_curve(int kind, const tspec_symbol* f, const tspec_symbol* g,
                                     int k, double s, size_t n, const tspec_pv_config* cfg,
                                     double* out);

/* Matrix-less prediction */
TSPEC_API int tspec_grid_extrapolate(const tspec_momentary* ms, size_t n0, int k,
                                     tspec_grid** out);
TSPEC_API void tspec_grid_free(tspec_grid* grid);
TSPEC_API int tspec_grid_info(const tspec_grid* grid, size_t* n0, int* k);
/* Writes c̃_ell at θ_j, j = 1..n0. */
TSPEC_API int tspec_grid_values(const tspec_grid* grid, int ell, double* buf, size_t cap);
/* Both arrays hold k-1 entries; pass count = 0 to remove the boundary. */
TSPEC_API int tspec_grid_set_boundary(tspec_grid* grid, const double* at_zero,
                                      const double* at_pi, size_t count);
TSPEC_API int tspec_boundary_values(double alpha1, double alpha0, int k, double* at_zero,
                                    double* at_pi);
TSPEC_API int tspec_grid_interpolate(const tspec_grid* grid, int ell, double theta, int degree,
                                     double* out);
TSPEC_API int tspec_grid_predict(const tspec_momentary* ms, const tspec_grid* grid, size_t n,
                                 int k, int degree, double* out);
/* Absolute errors against the reference solver; per_j may be NULL. */
TSPEC_API int tspec_grid_validate(const tspec_momentary* ms, const tspec_grid* grid, size_t n,
                                  int k, int degree, double* per_j, tspec_error_summary* out);
/* Absolute errors of caller-supplied predictions, normalized by (n0+1)^k (n+1). */
TSPEC_API int tspec_prediction_report(const double* exact, const double* pred, size_t n, size_t n0,
                                      int k, double* per_j, tspec_error_summary* out);

#ifdef __cplusplus
}
#endif

#endif
