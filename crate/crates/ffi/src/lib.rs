//! C ABI for the `fused-angles` crate.
//!
//! Rotations cross the boundary either as plain `#[repr(C)]` parameter
//! structs (stateless conversions) or as an opaque [`FaRotation`] handle
//! created by the `fa_rotation_from_*` functions and released with
//! [`fa_rotation_free`]. Every fallible function returns an [`FaStatus`];
//! outputs are written only on `FA_STATUS_OK`.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use fused_angles::convert::{
    fused_to_quat, fused_to_tilt, quat_to_fused, quat_to_rotmat, quat_to_tilt, rotmat_to_quat,
    tilt_to_fused, tilt_to_quat,
};
use fused_angles::fusedops::{self, MetricKind};
use fused_angles::{FusedAngles, Hemisphere, Quat, RotError, RotMat, TiltAngles};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaStatus {
    Ok = 0,
    NullPointer = 1,
    NonFinite = 2,
    NotUnitQuat = 3,
    NotRotation = 4,
    SineSum = 5,
    OutOfRange = 6,
    FusedYawSingular = 7,
    InvalidArgument = 8,
    Panic = 9,
}

impl From<&RotError> for FaStatus {
    fn from(e: &RotError) -> Self {
        match e {
            RotError::NonFinite { .. } => FaStatus::NonFinite,
            RotError::NotUnitQuat { .. } => FaStatus::NotUnitQuat,
            RotError::NotRotation { .. } => FaStatus::NotRotation,
            RotError::SineSum { .. } => FaStatus::SineSum,
            RotError::OutOfRange { .. } => FaStatus::OutOfRange,
            RotError::FusedYawSingular => FaStatus::FusedYawSingular,
            RotError::DegenerateVector { .. }
            | RotError::NotUnitAxis { .. }
            | RotError::NegativeHemisphere => FaStatus::InvalidArgument,
        }
    }
}

/// Values accepted by the `kind` argument of [`fa_rotation_distance`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaMetric {
    /// Rotation angle of the relative rotation, in radians.
    Riemannian = 0,
    /// `1 - |a . b|`, dimensionless.
    Linear = 1,
}

/// Unit quaternion, scalar first.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaQuat {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Rotation matrix, row-major.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaRotMat {
    pub m: [f64; 9],
}

/// Tilt angles (psi, gamma, alpha) in radians.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaTilt {
    pub psi: f64,
    pub gamma: f64,
    pub alpha: f64,
}

/// Fused angles in radians; `hemi` is 1 or -1.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaFused {
    pub psi: f64,
    pub theta: f64,
    pub phi: f64,
    pub hemi: i32,
}

/// Opaque rotation handle.
pub struct FaRotation(Quat);

impl From<Quat> for FaQuat {
    fn from(q: Quat) -> Self {
        FaQuat {
            w: q.w,
            x: q.x,
            y: q.y,
            z: q.z,
        }
    }
}

impl From<&TiltAngles> for FaTilt {
    fn from(t: &TiltAngles) -> Self {
        FaTilt {
            psi: t.psi,
            gamma: t.gamma,
            alpha: t.alpha,
        }
    }
}

impl From<&FusedAngles> for FaFused {
    fn from(f: &FusedAngles) -> Self {
        FaFused {
            psi: f.psi,
            theta: f.theta,
            phi: f.phi,
            hemi: f.hemi.token(),
        }
    }
}

type FfiResult<T> = Result<T, FaStatus>;

fn check<T>(r: fused_angles::Result<T>) -> FfiResult<T> {
    r.map_err(|e| FaStatus::from(&e))
}

fn quat_in(q: &FaQuat) -> FfiResult<Quat> {
    check(Quat::try_unit(q.w, q.x, q.y, q.z))
}

fn rotmat_in(r: &FaRotMat) -> FfiResult<RotMat> {
    let m = RotMat::from_flat(r.m);
    check(m.validate(fused_angles::rotcore::SO3_TOL))?;
    Ok(m)
}

fn tilt_in(t: &FaTilt) -> FfiResult<TiltAngles> {
    let t = TiltAngles::new(t.psi, t.gamma, t.alpha);
    check(t.validate())?;
    Ok(t)
}

fn fused_in(f: &FaFused) -> FfiResult<FusedAngles> {
    let hemi = Hemisphere::from_token(f.hemi).ok_or(FaStatus::InvalidArgument)?;
    check(FusedAngles::new(f.psi, f.theta, f.phi, hemi).validated())
}

/// Runs `body`, converting null pointers and panics into status codes.
fn guard(body: impl FnOnce() -> FfiResult<()>) -> FaStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FaStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => FaStatus::Panic,
    }
}

unsafe fn deref<'a, T>(p: *const T) -> FfiResult<&'a T> {
    p.as_ref().ok_or(FaStatus::NullPointer)
}

unsafe fn write<T>(out: *mut T, v: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(FaStatus::NullPointer);
    }
    out.write(v);
    Ok(())
}

unsafe fn write_handle(out: *mut *mut FaRotation, q: Quat) -> FfiResult<()> {
    if out.is_null() {
        return Err(FaStatus::NullPointer);
    }
    out.write(Box::into_raw(Box::new(FaRotation(q))));
    Ok(())
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn fa_status_message(status: i32) -> *const c_char {
    const CODES: [FaStatus; 10] = [
        FaStatus::Ok,
        FaStatus::NullPointer,
        FaStatus::NonFinite,
        FaStatus::NotUnitQuat,
        FaStatus::NotRotation,
        FaStatus::SineSum,
        FaStatus::OutOfRange,
        FaStatus::FusedYawSingular,
        FaStatus::InvalidArgument,
        FaStatus::Panic,
    ];
    let Some(&status) = usize::try_from(status).ok().and_then(|i| CODES.get(i)) else {
        return c"unknown status".as_ptr();
    };
    let s: &'static CStr = match status {
        FaStatus::Ok => c"ok",
        FaStatus::NullPointer => c"null pointer argument",
        FaStatus::NonFinite => c"non-finite value",
        FaStatus::NotUnitQuat => c"quaternion not unit norm",
        FaStatus::NotRotation => c"matrix not in SO(3)",
        FaStatus::SineSum => c"sine sum criterion violated",
        FaStatus::OutOfRange => c"value out of range",
        FaStatus::FusedYawSingular => c"fused yaw singular (alpha = pi)",
        FaStatus::InvalidArgument => c"invalid argument",
        FaStatus::Panic => c"internal error",
    };
    s.as_ptr()
}

// Stateless conversions.

/// # Safety
/// `input` must be null or point to a valid `FaFused`; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_fused_to_quat(input: *const FaFused, out: *mut FaQuat) -> FaStatus {
    guard(|| {
        let f = fused_in(deref(input)?)?;
        write(out, check(fused_to_quat(&f))?.into())
    })
}

/// # Safety
/// `input` must be null or point to a valid `FaQuat`; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_quat_to_fused(input: *const FaQuat, out: *mut FaFused) -> FaStatus {
    guard(|| {
        let q = quat_in(deref(input)?)?;
        write(out, (&quat_to_fused(q)).into())
    })
}

/// # Safety
/// `input` must be null or point to a valid `FaFused`; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_fused_to_tilt(input: *const FaFused, out: *mut FaTilt) -> FaStatus {
    guard(|| {
        let f = fused_in(deref(input)?)?;
        write(out, (&check(fused_to_tilt(&f))?).into())
    })
}

/// # Safety
/// `input` must be null or point to a valid `FaTilt`; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_tilt_to_fused(input: *const FaTilt, out: *mut FaFused) -> FaStatus {
    guard(|| {
        let t = tilt_in(deref(input)?)?;
        write(out, (&tilt_to_fused(&t)).into())
    })
}

/// Puts fused angles into standard form.
///
/// # Safety
/// `input` must be null or point to a valid `FaFused`; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_fused_standard_form(
    input: *const FaFused,
    out: *mut FaFused,
) -> FaStatus {
    guard(|| {
        let f = fused_in(deref(input)?)?;
        write(out, (&fusedops::standard_form(&f)).into())
    })
}

// Handle construction and destruction.

/// # Safety
/// `input` must be null or valid; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_from_quat(
    input: *const FaQuat,
    out: *mut *mut FaRotation,
) -> FaStatus {
    guard(|| write_handle(out, quat_in(deref(input)?)?))
}

/// # Safety
/// `input` must be null or valid; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_from_rotmat(
    input: *const FaRotMat,
    out: *mut *mut FaRotation,
) -> FaStatus {
    guard(|| write_handle(out, rotmat_to_quat(&rotmat_in(deref(input)?)?)))
}

/// # Safety
/// `input` must be null or valid; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_from_tilt(
    input: *const FaTilt,
    out: *mut *mut FaRotation,
) -> FaStatus {
    guard(|| write_handle(out, tilt_to_quat(&tilt_in(deref(input)?)?)))
}

/// # Safety
/// `input` must be null or valid; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_from_fused(
    input: *const FaFused,
    out: *mut *mut FaRotation,
) -> FaStatus {
    guard(|| {
        let f = fused_in(deref(input)?)?;
        write_handle(out, check(fused_to_quat(&f))?)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `rot` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_free(rot: *mut FaRotation) {
    if !rot.is_null() {
        drop(Box::from_raw(rot));
    }
}

// Handle accessors.

/// # Safety
/// `rot` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_to_quat(rot: *const FaRotation, out: *mut FaQuat) -> FaStatus {
    guard(|| write(out, deref(rot)?.0.into()))
}

/// # Safety
/// `rot` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_to_rotmat(
    rot: *const FaRotation,
    out: *mut FaRotMat,
) -> FaStatus {
    guard(|| {
        write(
            out,
            FaRotMat {
                m: quat_to_rotmat(deref(rot)?.0).to_flat(),
            },
        )
    })
}

/// # Safety
/// `rot` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_to_tilt(rot: *const FaRotation, out: *mut FaTilt) -> FaStatus {
    guard(|| write(out, (&quat_to_tilt(deref(rot)?.0)).into()))
}

/// # Safety
/// `rot` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_to_fused(
    rot: *const FaRotation,
    out: *mut FaFused,
) -> FaStatus {
    guard(|| write(out, (&quat_to_fused(deref(rot)?.0)).into()))
}

/// Fused yaw in radians. `singular` (optional) receives 1 when the rotation
/// is at the fused yaw singularity and the yaw is reported as 0.
///
/// # Safety
/// `rot` must be null or a live handle; `out` must be null or writable;
/// `singular` may be null.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_fused_yaw(
    rot: *const FaRotation,
    out: *mut f64,
    singular: *mut i32,
) -> FaStatus {
    guard(|| {
        let y = fusedops::quat_fused_yaw(deref(rot)?.0);
        if !singular.is_null() {
            singular.write(i32::from(y.singular));
        }
        write(out, y.value)
    })
}

// Operations producing new handles.

/// `out = a * b` (apply `b`, then `a`).
///
/// # Safety
/// `a`, `b` must be null or live handles; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_compose(
    a: *const FaRotation,
    b: *const FaRotation,
    out: *mut *mut FaRotation,
) -> FaStatus {
    guard(|| write_handle(out, fusedops::compose(deref(a)?.0, deref(b)?.0)))
}

/// # Safety
/// `rot` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_inverse(
    rot: *const FaRotation,
    out: *mut *mut FaRotation,
) -> FaStatus {
    guard(|| write_handle(out, deref(rot)?.0.conj()))
}

/// Tilt component of `rot` (fused yaw removed). Fails with
/// `FA_STATUS_FUSED_YAW_SINGULAR` at the singularity.
///
/// # Safety
/// `rot` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_remove_yaw(
    rot: *const FaRotation,
    out: *mut *mut FaRotation,
) -> FaStatus {
    guard(|| write_handle(out, check(fusedops::remove_yaw(deref(rot)?.0))?))
}

/// # Safety
/// `a`, `b` must be null or live handles; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_slerp(
    a: *const FaRotation,
    b: *const FaRotation,
    t: f64,
    out: *mut *mut FaRotation,
) -> FaStatus {
    guard(|| {
        if !(0.0..=1.0).contains(&t) {
            return Err(FaStatus::OutOfRange);
        }
        write_handle(out, fusedops::slerp(deref(a)?.0, deref(b)?.0, t))
    })
}

/// Distance between two rotations; `kind` is an `FaMetric` value.
///
/// # Safety
/// `a`, `b` must be null or live handles; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fa_rotation_distance(
    a: *const FaRotation,
    b: *const FaRotation,
    kind: i32,
    out: *mut f64,
) -> FaStatus {
    guard(|| {
        let kind = match kind {
            k if k == FaMetric::Riemannian as i32 => MetricKind::Riemannian,
            k if k == FaMetric::Linear as i32 => MetricKind::Linear,
            _ => return Err(FaStatus::InvalidArgument),
        };
        write(out, fusedops::metric(kind, deref(a)?.0, deref(b)?.0).value)
    })
}
