#ifndef EMGEO_H
#define EMGEO_H

/* Generated by cbindgen from emgeo-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Placement of the magnetic connection components.
 */
typedef enum EmgeoPlacement {
  EmgeoPlacement_Lorentz = 0,
  EmgeoPlacement_Full = 1,
  EmgeoPlacement_Alternative = 2,
} EmgeoPlacement;

/**
 * Status code returned by every fallible call.
 */
typedef enum EmgeoStatus {
  EmgeoStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  EmgeoStatus_NullArgument = 1,
  /**
   * A parameter was out of range (mass, step, beta, placement, ...).
   */
  EmgeoStatus_InvalidParameter = 2,
  /**
   * The field model is singular at the requested point.
   */
  EmgeoStatus_Singularity = 3,
  /**
   * The u⁰ > 0 monitor tripped during integration.
   */
  EmgeoStatus_TimeReversal = 4,
  /**
   * The caller-provided buffer cannot hold the result.
   */
  EmgeoStatus_BufferTooSmall = 5,
} EmgeoStatus;

/**
 * Opaque field-model handle.
 */
typedef struct EmgeoModel EmgeoModel;

/**
 * Test-particle parameters in Gaussian units; `tau0 <= 0` means "no
 * lifetime attached".
 */
typedef struct EmgeoParticle {
  double q;
  double m;
  double c;
  double tau0;
} EmgeoParticle;

/**
 * The Ricci symmetry combinations and their closed-form targets at one
 * point. Residual magnitudes are measured against `scale`.
 */
typedef struct EmgeoSymmetryReport {
  double trace_re;
  double trace_im;
  double mixed_re[3];
  double mixed_im[3];
  double spatial_re[3];
  double spatial_im[3];
  double trace_expected;
  double mixed_expected[3];
  double spatial_expected[3];
  double scale;
  double max_residual;
} EmgeoSymmetryReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Uniform field model with constant E and B.
 *
 * # Safety
 * `e` and `b` must each point to 3 readable doubles.
 */
struct EmgeoModel *emgeo_model_uniform(const double *e, const double *b);

/**
 * Plane wave moving toward +z with amplitude `e0` and wavenumber `k`.
 */
struct EmgeoModel *emgeo_model_plane_wave(double e0, double k);

/**
 * Static Coulomb field of source charge `q_src`, singular at the origin.
 */
struct EmgeoModel *emgeo_model_coulomb(double q_src);

/**
 * Field affine in the coordinates: base values plus 3×4 gradient matrices
 * in row-major order (rows E_x, E_y, E_z; columns x⁰..x³).
 *
 * # Safety
 * `e0` and `b0` must each point to 3 readable doubles; `grad_e` and
 * `grad_b` must each point to 12 readable doubles.
 */
struct EmgeoModel *emgeo_model_linear_gradient(const double *e0,
                                               const double *b0,
                                               const double *grad_e,
                                               const double *grad_b);

/**
 * Release a model handle. Null is ignored.
 *
 * # Safety
 * `model` must be null or a pointer previously returned by one of the
 * `emgeo_model_*` constructors, not yet freed.
 */
void emgeo_model_free(struct EmgeoModel *model);

/**
 * Connection components Γ^i_jk at `point`, written into two 64-entry
 * buffers indexed `(i*4 + j)*4 + k`.
 *
 * # Safety
 * `model`, `particle`, and `point` must be valid for reads (`point`: 4
 * doubles); `out_re` and `out_im` must each point to 64 writable doubles.
 */
enum EmgeoStatus emgeo_connection(const struct EmgeoModel *model,
                                  const struct EmgeoParticle *particle,
                                  enum EmgeoPlacement placement,
                                  const double *point,
                                  double *out_re,
                                  double *out_im);

/**
 * Torsion components T^i_jk at `point`, same layout as
 * [`emgeo_connection`].
 *
 * # Safety
 * Same contract as [`emgeo_connection`].
 */
enum EmgeoStatus emgeo_torsion(const struct EmgeoModel *model,
                               const struct EmgeoParticle *particle,
                               enum EmgeoPlacement placement,
                               const double *point,
                               double *out_re,
                               double *out_im);

/**
 * Ricci symmetry combinations and closed-form targets at `point`.
 *
 * # Safety
 * `model`, `particle`, `point` (4 doubles), and `out` must be valid;
 * `out` must be writable.
 */
enum EmgeoStatus emgeo_symmetry_report(const struct EmgeoModel *model,
                                       const struct EmgeoParticle *particle,
                                       enum EmgeoPlacement placement,
                                       const double *point,
                                       struct EmgeoSymmetryReport *out);

/**
 * The six "observable" component averages of the connection of uniform
 * fields (e, b), Lorentz-boosted along `axis` with velocity `beta`.
 * `out_e` and `out_b` receive three doubles each.
 *
 * # Safety
 * `e`, `b` (3 doubles each), `particle`, `out_e`, `out_b` (3 writable
 * doubles each) must be valid.
 */
enum EmgeoStatus emgeo_boost_observables(const double *e,
                                         const double *b,
                                         const struct EmgeoParticle *particle,
                                         size_t axis,
                                         double beta,
                                         double *out_e,
                                         double *out_b);

/**
 * Integrate the geodesic from `x0`, `u0` to path length `s_end` with step
 * `h`. Samples are written as rows of 9 doubles (s, x⁰..x³, u⁰..u³) into
 * `out`, which holds `capacity` rows; `written` receives the row count.
 * Returns `BufferTooSmall` (with `written` = required rows) when the
 * trajectory does not fit.
 *
 * # Safety
 * All pointers must be valid; `out` must allow `capacity * 9` writable
 * doubles; `x0` and `u0` point to 4 readable doubles each.
 */
enum EmgeoStatus emgeo_geodesic_integrate(const struct EmgeoModel *model,
                                          const struct EmgeoParticle *particle,
                                          enum EmgeoPlacement placement,
                                          const double *x0,
                                          const double *u0,
                                          double s_end,
                                          double h,
                                          double *out,
                                          size_t capacity,
                                          size_t *written);

/**
 * Crate version as a static NUL-terminated string.
 */
const char *emgeo_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EMGEO_H */
