#ifndef ANGLE_SPACE_H
#define ANGLE_SPACE_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every FFI call.
typedef enum AngleSpaceStatus {
  ANGLE_SPACE_STATUS_OK = 0,
  ANGLE_SPACE_STATUS_NULL_POINTER = 1,
  ANGLE_SPACE_STATUS_PARSE_ERROR = 2,
  ANGLE_SPACE_STATUS_ZERO_SET_VECTOR = 3,
  ANGLE_SPACE_STATUS_ZERO_VECTOR = 4,
  // The spade product exceeds the CSB bound; the angle is undefined
  // but the product/bound outputs are valid.
  ANGLE_SPACE_STATUS_CSB_VIOLATION = 5,
  ANGLE_SPACE_STATUS_NOT_BRACKETED = 6,
  ANGLE_SPACE_STATUS_NOT_NORMABLE = 7,
  ANGLE_SPACE_STATUS_DEGENERATE_INPUT = 8,
  ANGLE_SPACE_STATUS_UNBOUNDED_DIRECTION = 9,
  ANGLE_SPACE_STATUS_NO_VIOLATION_FOUND = 10,
  ANGLE_SPACE_STATUS_INVALID_INPUT = 11,
  ANGLE_SPACE_STATUS_INTERNAL_ERROR = 12,
} AngleSpaceStatus;

// Opaque weight handle.
typedef struct AngleSpaceWeight AngleSpaceWeight;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// ABI version of this header/library pair.
uint32_t angle_space_abi_version(void);

// Parse a weight-spec string into a new handle.
//
// On success writes the handle to `out` and returns `Ok`; the handle
// must be released with [`angle_space_weight_free`].
//
// # Safety
// `spec` must be a valid NUL-terminated string; `out` must be a valid
// pointer.
enum AngleSpaceStatus angle_space_weight_parse(const char *spec, struct AngleSpaceWeight **out);

// Release a weight handle. NULL is a no-op.
//
// # Safety
// `w` must be a handle from [`angle_space_weight_parse`], not yet freed.
void angle_space_weight_free(struct AngleSpaceWeight *w);

// Evaluate `‖(x1, x2)‖`.
//
// # Safety
// `w` must be a live handle; `out` a valid pointer.
enum AngleSpaceStatus angle_space_weight_eval(const struct AngleSpaceWeight *w,
                                              double x1,
                                              double x2,
                                              double *out);

// Zero-set membership of `(x1, x2)`.
//
// # Safety
// `w` must be a live handle; `out` a valid pointer.
enum AngleSpaceStatus angle_space_weight_in_zero_set(const struct AngleSpaceWeight *w,
                                                     double x1,
                                                     double x2,
                                                     bool *out);

// Unit-sphere projection `v/‖v‖`.
//
// # Safety
// `w` must be a live handle; `out_x1`, `out_x2` valid pointers.
enum AngleSpaceStatus angle_space_weight_sign(const struct AngleSpaceWeight *w,
                                              double x1,
                                              double x2,
                                              double *out_x1,
                                              double *out_x2);

// The spade product `⟨x|y⟩♠`.
//
// # Safety
// `w` must be a live handle; `out` a valid pointer.
enum AngleSpaceStatus angle_space_spade_product(const struct AngleSpaceWeight *w,
                                                double x1,
                                                double x2,
                                                double y1,
                                                double y2,
                                                double *out);

// The Thy angle of `(x, y)` in radians.
//
// On `Ok`, `out_angle` holds the angle and `out_product`/`out_bound`
// the spade product and `‖x‖·‖y‖`. On `CsbViolation`, the angle is NaN
// and product/bound describe the violation. Any out-pointer may be NULL
// to skip that value.
//
// # Safety
// `w` must be a live handle; non-NULL out-pointers must be valid.
enum AngleSpaceStatus angle_space_thy_angle(const struct AngleSpaceWeight *w,
                                            double x1,
                                            double x2,
                                            double y1,
                                            double y2,
                                            double *out_angle,
                                            double *out_product,
                                            double *out_bound);

// The Euclidean angle (standard dot product), weight-independent.
//
// # Safety
// `out` must be a valid pointer.
enum AngleSpaceStatus angle_space_euclid_angle(double x1,
                                               double x2,
                                               double y1,
                                               double y2,
                                               double *out);

// `Θ(t) = ∠(x, y + t·x)`.
//
// # Safety
// `w` must be a live handle; `out_angle` a valid pointer.
enum AngleSpaceStatus angle_space_theta(const struct AngleSpaceWeight *w,
                                        double x1,
                                        double x2,
                                        double y1,
                                        double y2,
                                        double t,
                                        double *out_angle);

// Solve `Θ(t) = alpha` for `t`, `alpha ∈ (0, π)`; requires a norm.
//
// # Safety
// `w` must be a live handle; `out_t` a valid pointer.
enum AngleSpaceStatus angle_space_theta_inverse(const struct AngleSpaceWeight *w,
                                                double x1,
                                                double x2,
                                                double y1,
                                                double y2,
                                                double alpha,
                                                double *out_t);

// Polar coordinates of `v` in the basis `(b1, b2)`.
//
// # Safety
// `w` must be a live handle; `out_rho`, `out_alpha` valid pointers.
enum AngleSpaceStatus angle_space_polar_encode(const struct AngleSpaceWeight *w,
                                               double b1_x1,
                                               double b1_x2,
                                               double b2_x1,
                                               double b2_x2,
                                               double v_x1,
                                               double v_x2,
                                               double *out_rho,
                                               double *out_alpha);

// Vector with weight `rho` and signed angle `alpha` in the basis
// `(b1, b2)`.
//
// # Safety
// `w` must be a live handle; `out_x1`, `out_x2` valid pointers.
enum AngleSpaceStatus angle_space_polar_decode(const struct AngleSpaceWeight *w,
                                               double b1_x1,
                                               double b1_x2,
                                               double b2_x1,
                                               double b2_x2,
                                               double rho,
                                               double alpha,
                                               double *out_x1,
                                               double *out_x2);

// The generalized Thy angle through the gauge of `conv(B)`, built from
// `hull_samples` sphere samples (0 picks the default).
//
// # Safety
// `w` must be a live handle; `out_angle` a valid pointer.
enum AngleSpaceStatus angle_space_generalized_thy_angle(const struct AngleSpaceWeight *w,
                                                        uint32_t hull_samples,
                                                        double x1,
                                                        double x2,
                                                        double y1,
                                                        double y2,
                                                        double *out_angle);

// Full An1–An11 report as a JSON string (same schema as the CLI).
// The string must be released with [`angle_space_string_free`].
//
// # Safety
// `w` must be a live handle; `out_json` a valid pointer.
enum AngleSpaceStatus angle_space_axioms_report_json(const struct AngleSpaceWeight *w,
                                                     uint64_t seed,
                                                     uint64_t samples,
                                                     char **out_json);

// CSB scan with auto-detected corner hints, as a JSON string.
// The string must be released with [`angle_space_string_free`].
//
// # Safety
// `w` must be a live handle; `out_json` a valid pointer.
enum AngleSpaceStatus angle_space_csb_scan_json(const struct AngleSpaceWeight *w,
                                                uint64_t seed,
                                                uint64_t samples,
                                                char **out_json);

// Release a string returned by this library. NULL is a no-op.
//
// # Safety
// `s` must originate from this library and not be freed twice.
void angle_space_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ANGLE_SPACE_H */
