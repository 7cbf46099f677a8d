#ifndef FUSED_ANGLES_H
#define FUSED_ANGLES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum FaStatus {
  FA_STATUS_OK = 0,
  FA_STATUS_NULL_POINTER = 1,
  FA_STATUS_NON_FINITE = 2,
  FA_STATUS_NOT_UNIT_QUAT = 3,
  FA_STATUS_NOT_ROTATION = 4,
  FA_STATUS_SINE_SUM = 5,
  FA_STATUS_OUT_OF_RANGE = 6,
  FA_STATUS_FUSED_YAW_SINGULAR = 7,
  FA_STATUS_INVALID_ARGUMENT = 8,
  FA_STATUS_PANIC = 9,
} FaStatus;

/**
 * Values accepted by the `kind` argument of [`fa_rotation_distance`].
 */
typedef enum FaMetric {
  /**
   * Rotation angle of the relative rotation, in radians.
   */
  FA_METRIC_RIEMANNIAN = 0,
  /**
   * `1 - |a . b|`, dimensionless.
   */
  FA_METRIC_LINEAR = 1,
} FaMetric;

/**
 * Opaque rotation handle.
 */
typedef struct FaRotation FaRotation;

/**
 * Fused angles in radians; `hemi` is 1 or -1.
 */
typedef struct FaFused {
  double psi;
  double theta;
  double phi;
  int32_t hemi;
} FaFused;

/**
 * Unit quaternion, scalar first.
 */
typedef struct FaQuat {
  double w;
  double x;
  double y;
  double z;
} FaQuat;

/**
 * Tilt angles (psi, gamma, alpha) in radians.
 */
typedef struct FaTilt {
  double psi;
  double gamma;
  double alpha;
} FaTilt;

/**
 * Rotation matrix, row-major.
 */
typedef struct FaRotMat {
  double m[9];
} FaRotMat;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of a status code.
 */
const char *fa_status_message(int32_t status);

/**
 * # Safety
 * `input` must be null or point to a valid `FaFused`; `out` must be null or writable.
 */
enum FaStatus fa_fused_to_quat(const struct FaFused *input, struct FaQuat *out);

/**
 * # Safety
 * `input` must be null or point to a valid `FaQuat`; `out` must be null or writable.
 */
enum FaStatus fa_quat_to_fused(const struct FaQuat *input, struct FaFused *out);

/**
 * # Safety
 * `input` must be null or point to a valid `FaFused`; `out` must be null or writable.
 */
enum FaStatus fa_fused_to_tilt(const struct FaFused *input, struct FaTilt *out);

/**
 * # Safety
 * `input` must be null or point to a valid `FaTilt`; `out` must be null or writable.
 */
enum FaStatus fa_tilt_to_fused(const struct FaTilt *input, struct FaFused *out);

/**
 * Puts fused angles into standard form.
 *
 * # Safety
 * `input` must be null or point to a valid `FaFused`; `out` must be null or writable.
 */
enum FaStatus fa_fused_standard_form(const struct FaFused *input, struct FaFused *out);

/**
 * # Safety
 * `input` must be null or valid; `out` must be null or writable.
 */
enum FaStatus fa_rotation_from_quat(const struct FaQuat *input, struct FaRotation **out);

/**
 * # Safety
 * `input` must be null or valid; `out` must be null or writable.
 */
enum FaStatus fa_rotation_from_rotmat(const struct FaRotMat *input, struct FaRotation **out);

/**
 * # Safety
 * `input` must be null or valid; `out` must be null or writable.
 */
enum FaStatus fa_rotation_from_tilt(const struct FaTilt *input, struct FaRotation **out);

/**
 * # Safety
 * `input` must be null or valid; `out` must be null or writable.
 */
enum FaStatus fa_rotation_from_fused(const struct FaFused *input, struct FaRotation **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `rot` must be null or a handle from this library that has not been freed.
 */
void fa_rotation_free(struct FaRotation *rot);

/**
 * # Safety
 * `rot` must be null or a live handle; `out` must be null or writable.
 */
enum FaStatus fa_rotation_to_quat(const struct FaRotation *rot, struct FaQuat *out);

/**
 * # Safety
 * `rot` must be null or a live handle; `out` must be null or writable.
 */
enum FaStatus fa_rotation_to_rotmat(const struct FaRotation *rot, struct FaRotMat *out);

/**
 * # Safety
 * `rot` must be null or a live handle; `out` must be null or writable.
 */
enum FaStatus fa_rotation_to_tilt(const struct FaRotation *rot, struct FaTilt *out);

/**
 * # Safety
 * `rot` must be null or a live handle; `out` must be null or writable.
 */
enum FaStatus fa_rotation_to_fused(const struct FaRotation *rot, struct FaFused *out);

/**
 * Fused yaw in radians. `singular` (optional) receives 1 when the rotation
 * is at the fused yaw singularity and the yaw is reported as 0.
 *
 * # Safety
 * `rot` must be null or a live handle; `out` must be null or writable;
 * `singular` may be null.
 */
enum FaStatus fa_rotation_fused_yaw(const struct FaRotation *rot, double *out, int32_t *singular);

/**
 * `out = a * b` (apply `b`, then `a`).
 *
 * # Safety
 * `a`, `b` must be null or live handles; `out` must be null or writable.
 */
enum FaStatus fa_rotation_compose(const struct FaRotation *a,
                                  const struct FaRotation *b,
                                  struct FaRotation **out);

/**
 * # Safety
 * `rot` must be null or a live handle; `out` must be null or writable.
 */
enum FaStatus fa_rotation_inverse(const struct FaRotation *rot, struct FaRotation **out);

/**
 * Tilt component of `rot` (fused yaw removed). Fails with
 * `FA_STATUS_FUSED_YAW_SINGULAR` at the singularity.
 *
 * # Safety
 * `rot` must be null or a live handle; `out` must be null or writable.
 */
enum FaStatus fa_rotation_remove_yaw(const struct FaRotation *rot, struct FaRotation **out);

/**
 * # Safety
 * `a`, `b` must be null or live handles; `out` must be null or writable.
 */
enum FaStatus fa_rotation_slerp(const struct FaRotation *a,
                                const struct FaRotation *b,
                                double t,
                                struct FaRotation **out);

/**
 * Distance between two rotations; `kind` is an `FaMetric` value.
 *
 * # Safety
 * `a`, `b` must be null or live handles; `out` must be null or writable.
 */
enum FaStatus fa_rotation_distance(const struct FaRotation *a,
                                   const struct FaRotation *b,
                                   int32_t kind,
                                   double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FUSED_ANGLES_H */
