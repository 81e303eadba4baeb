#ifndef UNIFOUR_H
#define UNIFOUR_H

/* Generated by cbindgen from the unifour-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum {
  UNIFOUR_STATUS_OK = 0,
  UNIFOUR_STATUS_NULL_POINTER = 1,
  UNIFOUR_STATUS_INVALID_ARGUMENT = 2,
  UNIFOUR_STATUS_DOMAIN_ERROR = 3,
  UNIFOUR_STATUS_POLE_ERROR = 4,
  UNIFOUR_STATUS_NO_CONVERGENCE = 5,
  UNIFOUR_STATUS_TAIL_NOT_DECAYED = 6,
  UNIFOUR_STATUS_BOUNDARY_VIOLATION = 7,
  UNIFOUR_STATUS_GRID_TOO_COARSE = 8,
  UNIFOUR_STATUS_GRID_TOO_SMALL = 9,
  UNIFOUR_STATUS_PARITY_MISMATCH = 10,
  UNIFOUR_STATUS_CLOSED_FORM_MISMATCH = 11,
  UNIFOUR_STATUS_SINGULARITY_TOO_STRONG = 12,
  UNIFOUR_STATUS_INTERNAL_ERROR = 13,
} UnifourStatus;

/**
 * Parity tag of a sampled function.
 */
typedef enum {
  UNIFOUR_PARITY_EVEN = 0,
  UNIFOUR_PARITY_ODD = 1,
  UNIFOUR_PARITY_NONE = 2,
} UnifourParity;

/**
 * Transform selector.
 */
typedef enum {
  UNIFOUR_TRANSFORM_KIND_SINE = 0,
  UNIFOUR_TRANSFORM_KIND_COSINE = 1,
} UnifourTransformKind;

/**
 * Opaque handle to a sampled function.
 */
typedef struct UnifourGridFunction UnifourGridFunction;

/**
 * Quadrature settings (see `unifour_quadrature_config_default`).
 */
typedef struct {
  double truncation_radius;
  double rel_tol;
  uintptr_t max_subdivisions;
} UnifourQuadratureConfig;

/**
 * Real-valued callback: `f(x, ctx)`.
 */
typedef double (*UnifourRealFn)(double, void*);

/**
 * Admissibility flags of a candidate exponent.
 */
typedef struct {
  bool parseval_ok;
  bool moment_ok;
  bool derivative_conditions_ok;
  bool parity_ok;
  bool accepted;
} UnifourAdmissibility;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *unifour_status_message(UnifourStatus status);

/**
 * Default quadrature settings (truncation 12, rel_tol 1e-9, 2000 panels).
 */
UnifourQuadratureConfig unifour_quadrature_config_default(void);

/**
 * Γ(z). Fails with `POLE_ERROR` at non-positive integers.
 * # Safety
 * `out`, when non-null, must be valid for one f64 write.
 */
UnifourStatus unifour_gamma(double z, double *out);

/**
 * Kummer ₁F₁(a1, b1, z) by series summation.
 * # Safety
 * `out`, when non-null, must be valid for one f64 write.
 */
UnifourStatus unifour_kummer_series(double a1,
                                    double b1,
                                    double z,
                                    uintptr_t max_terms,
                                    double *out);

/**
 * Two-term large-z asymptotic estimate of ₁F₁ on the positive real axis.
 * # Safety
 * `out`, when non-null, must be valid for one f64 write.
 */
UnifourStatus unifour_kummer_asymptotic(double a1, double b1, double z, double *out);

/**
 * Hermite polynomial H_n(x).
 * # Safety
 * `out`, when non-null, must be valid for one f64 write.
 */
UnifourStatus unifour_hermite(uint32_t n, double x, double *out);

/**
 * Generalized Laguerre polynomial L_n^{(alpha)}(x), x >= 0.
 * # Safety
 * `out`, when non-null, must be valid for one f64 write.
 */
UnifourStatus unifour_laguerre(uint32_t n, double alpha, double x, double *out);

/**
 * Create a sampled function from parallel arrays. The handle must be
 * released with `unifour_grid_free`.
 * # Safety
 * `grid` and `values`, when non-null, must each reference `len` readable f64s; `out`, when non-null, must be valid for one pointer write.
 */
UnifourStatus unifour_grid_new(const double *grid,
                               const double *values,
                               uintptr_t len,
                               UnifourParity parity,
                               UnifourGridFunction **out);

/**
 * Release a grid-function handle. NULL is a no-op.
 * # Safety
 * `handle` must be null or a pointer obtained from this library that has not been freed yet.
 */
void unifour_grid_free(UnifourGridFunction *handle);

/**
 * Number of samples held by the handle (0 for NULL).
 * # Safety
 * `handle` must be null or a live handle from this library.
 */
uintptr_t unifour_grid_len(const UnifourGridFunction *handle);

/**
 * Parity tag of the handle.
 * # Safety
 * `handle` must be null or a live handle from this library; `out`, when non-null, must be valid for one write.
 */
UnifourStatus unifour_grid_parity(const UnifourGridFunction *handle,
                                  UnifourParity *out);

/**
 * Copy up to `len` grid points and values into caller buffers (either
 * pointer may be NULL to skip that side).
 * # Safety
 * `handle` must be null or a live handle from this library; non-null `grid_out`/`values_out` must be valid for `len` f64 writes.
 */
UnifourStatus unifour_grid_copy(const UnifourGridFunction *handle,
                                double *grid_out,
                                double *values_out,
                                uintptr_t len);

/**
 * Cubic interpolation of the samples at `x` (0 outside the span).
 * # Safety
 * `handle` must be null or a live handle from this library; `out`, when non-null, must be valid for one f64 write.
 */
UnifourStatus unifour_grid_eval(const UnifourGridFunction *handle,
                                double x,
                                double *out);

/**
 * Forward sine/cosine transform of a callback evaluated on `k_grid`.
 * On success `*out` holds a new grid-function handle.
 * # Safety
 * A non-null `f` must be safe to call with any finite argument and `ctx`; `k_grid`, when non-null, must reference `k_len` readable f64s; `out`, when non-null, must be valid for one pointer write.
 */
UnifourStatus unifour_forward_transform(UnifourRealFn f,
                                        void *ctx,
                                        UnifourParity parity,
                                        UnifourTransformKind kind,
                                        const double *k_grid,
                                        uintptr_t k_len,
                                        const UnifourQuadratureConfig *cfg,
                                        UnifourGridFunction **out);

/**
 * Forward transform of sampled data.
 * # Safety
 * `f` must be null or a live handle from this library; `k_grid`, when non-null, must reference `k_len` readable f64s; `out`, when non-null, must be valid for one pointer write.
 */
UnifourStatus unifour_forward_transform_grid(const UnifourGridFunction *f,
                                             UnifourTransformKind kind,
                                             const double *k_grid,
                                             uintptr_t k_len,
                                             const UnifourQuadratureConfig *cfg,
                                             UnifourGridFunction **out);

/**
 * Inverse transform of sampled transform values.
 * # Safety
 * `transform` must be null or a live handle from this library; `zeta_grid`, when non-null, must reference `zeta_len` readable f64s; `out`, when non-null, must be valid for one pointer write.
 */
UnifourStatus unifour_inverse_transform_grid(const UnifourGridFunction *transform,
                                             UnifourTransformKind kind,
                                             const double *zeta_grid,
                                             uintptr_t zeta_len,
                                             const UnifourQuadratureConfig *cfg,
                                             UnifourGridFunction **out);

/**
 * |∫f² - ∫F²| for a sampled transform pair.
 * # Safety
 * `f` and `transform` must be null or live handles from this library; `out`, when non-null, must be valid for one f64 write.
 */
UnifourStatus unifour_parseval_gap(const UnifourGridFunction *f,
                                   const UnifourGridFunction *transform,
                                   const UnifourQuadratureConfig *cfg,
                                   double *out);

/**
 * ∫ ζ^order f(ζ) dζ of sampled data.
 * # Safety
 * `f` must be null or a live handle from this library; `out`, when non-null, must be valid for one f64 write.
 */
UnifourStatus unifour_weighted_moment(const UnifourGridFunction *f,
                                      uintptr_t order,
                                      const UnifourQuadratureConfig *cfg,
                                      double *out);

/**
 * Moment/derivative identity gap at the origin for a sampled pair.
 * # Safety
 * `f` and `transform` must be null or live handles from this library; `out`, when non-null, must be valid for one f64 write.
 */
UnifourStatus unifour_moment_derivative_gap(const UnifourGridFunction *f,
                                            const UnifourGridFunction *transform,
                                            UnifourTransformKind kind,
                                            uintptr_t n,
                                            double *out);

/**
 * Φ(k) = k^a e^{-k²/4} for k > 0.
 * # Safety
 * `out`, when non-null, must be valid for one f64 write.
 */
UnifourStatus unifour_phi_transform(double a, UnifourTransformKind kind, double k, double *out);

/**
 * Max residual of the transformed first-order equation on `k_grid`.
 * # Safety
 * `k_grid`, when non-null, must reference `k_len` readable f64s; `out`, when non-null, must be valid for one f64 write.
 */
UnifourStatus unifour_transformed_ode_residual(double a,
                                               UnifourTransformKind kind,
                                               double epsilon,
                                               const double *k_grid,
                                               uintptr_t k_len,
                                               double *out);

/**
 * Admissibility flags of a candidate exponent.
 * # Safety
 * `out`, when non-null, must be valid for one struct write.
 */
UnifourStatus unifour_classify_exponent(double a,
                                        UnifourTransformKind kind,
                                        UnifourAdmissibility *out);

/**
 * Numeric inversion of a candidate transform on `zeta_grid`; on success
 * `*out` holds a new grid-function handle with the quadrature values.
 * # Safety
 * `zeta_grid`, when non-null, must reference `zeta_len` readable f64s; `out`, when non-null, must be valid for one pointer write.
 */
UnifourStatus unifour_invert_candidate(double a,
                                       UnifourTransformKind kind,
                                       const double *zeta_grid,
                                       uintptr_t zeta_len,
                                       const UnifourQuadratureConfig *cfg,
                                       UnifourGridFunction **out);

/**
 * Growth diagnostic of a rejected candidate; writes whether |e^{ζ²/2} φ|
 * increases across the probe points.
 * # Safety
 * `zeta_probe`, when non-null, must reference `probe_len` readable f64s; `out_growing`, when non-null, must be valid for one bool write.
 */
UnifourStatus unifour_growth_diagnostic(double a,
                                        UnifourTransformKind kind,
                                        const double *zeta_probe,
                                        uintptr_t probe_len,
                                        const UnifourQuadratureConfig *cfg,
                                        bool *out_growing);

/**
 * The n-th normalized eigenfunction sampled on a symmetric grid; writes
 * ε_n and a new handle holding ψ_n.
 * # Safety
 * `x_grid`, when non-null, must reference `x_len` readable f64s; non-null `epsilon_out`/`psi_out` must be valid for one write each.
 */
UnifourStatus unifour_eigenpair(uint32_t n,
                                const double *x_grid,
                                uintptr_t x_len,
                                double *epsilon_out,
                                UnifourGridFunction **psi_out);

/**
 * Normalized Schrödinger residual of sampled eigenfunction data at a given
 * eigenvalue.
 * # Safety
 * `psi` must be null or a live handle from this library; `out`, when non-null, must be valid for one f64 write.
 */
UnifourStatus unifour_schrodinger_residual(const UnifourGridFunction *psi,
                                           uint32_t n,
                                           double epsilon,
                                           double *out);

/**
 * ε_n = n + 1/2 for n = 0..=n_max, written into `out[0..=n_max]`.
 * # Safety
 * `out`, when non-null, must be valid for `n_max + 1` f64 writes.
 */
UnifourStatus unifour_spectrum(uint32_t n_max, double *out);

/**
 * Lowest `n_states` finite-difference eigenvalues, written into
 * `out[0..n_states]`.
 * # Safety
 * `out`, when non-null, must be valid for `n_states` f64 writes.
 */
UnifourStatus unifour_fd_eigenvalues(double half_width,
                                     uintptr_t points,
                                     uintptr_t n_states,
                                     double *out);

/**
 * One finite-difference eigenvector: writes the eigenvalue and a handle to
 * the sampled eigenfunction.
 * # Safety
 * Non-null `epsilon_out`/`psi_out` must be valid for one write each.
 */
UnifourStatus unifour_fd_eigenvector(double half_width,
                                     uintptr_t points,
                                     uintptr_t state,
                                     double *epsilon_out,
                                     UnifourGridFunction **psi_out);

/**
 * Reference estimate of ∫₀^∞ f via Richardson-refined midpoint panels.
 * # Safety
 * A non-null `f` must be safe to call with any finite argument and `ctx`; `out`, when non-null, must be valid for one f64 write.
 */
UnifourStatus unifour_reference_quadrature(UnifourRealFn f,
                                           void *ctx,
                                           const UnifourQuadratureConfig *cfg,
                                           double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UNIFOUR_H */
